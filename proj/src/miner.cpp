#include "evomine/miner.hpp"

#include <algorithm>
#include <set>

#include "evomine/dfs_code.hpp"
#include "evomine/errors.hpp"
#include "evomine/isomorphism.hpp"

namespace evomine {

void MiningConfig::validate() const {
    if (alpha < Rational(0) || alpha > Rational(1))
        throw ConfigError("alpha must lie in [0, 1]");
    if (max_edges < 1) throw ConfigError("max-edges must be at least 1");
    if (max_edges > 64) throw ConfigError("max-edges is capped at 64");
}

FrequencyTable::FrequencyTable(int window_id, long long window_size)
    : window_id_(window_id), window_size_(window_size) {
    if (window_size < 1) throw InternalError("frequency table: empty window");
}

Rational FrequencyTable::freq_of(const std::string& code) const {
    auto it = entries_.find(code);
    return it == entries_.end() ? Rational(0) : it->second.freq();
}

void FrequencyTable::insert(Pattern pattern, long long support) {
    if (support < 0 || support > window_size_)
        throw InternalError("frequency table: support out of range");
    std::string code = pattern.code();
    entries_.insert_or_assign(std::move(code),
                              Entry{std::move(pattern), support, window_size_});
}

Rational frequency(const Pattern& pattern, const TimeWindow& window) {
    long long support = 0;
    for (const Snapshot& s : window.snapshots())
        if (is_subgraph(pattern, s)) ++support;
    return Rational(support, window.size());
}

FrequencyTable evaluate_patterns(const std::vector<Pattern>& patterns,
                                 const TimeWindow& window) {
    FrequencyTable table(window.window_id(), window.size());
    for (const Pattern& p : patterns) {
        long long support = 0;
        for (const Snapshot& s : window.snapshots())
            if (is_subgraph(p, s)) ++support;
        table.insert(p, support);
    }
    return table;
}

namespace {

// Window-wide transaction database with labels interned over the union
// vocabulary (rank order = lexicographic order, shared with code strings).
struct DbEdge {
    int to, label, eid;
};

struct DbGraph {
    std::vector<int> vlabels;
    std::vector<std::vector<DbEdge>> adj;
    int edge_count = 0;
};

// One embedding extension step: the oriented database edge this pattern edge
// maps to, linked to the embedding of the code prefix. Parent projections
// stay alive during recursion, so prev pointers remain valid.
struct Pdfs {
    int gid;
    int from_v, to_v, elabel, eid;
    const Pdfs* prev;
};

using Projected = std::vector<Pdfs>;

struct EdgeLess {
    bool operator()(const DfsEdge& a, const DfsEdge& b) const { return dfs_edge_less(a, b); }
};

long long distinct_graphs(const Projected& projected) {
    long long n = 0;
    int last = -1;
    for (const Pdfs& p : projected)
        if (p.gid != last) {
            ++n;
            last = p.gid;
        }
    return n;
}

class Miner {
public:
    Miner(const TimeWindow& window, const MiningConfig& config, FrequencyTable& out)
        : window_(window), out_(out), max_edges_(config.max_edges) {
        // smallest support count with support / |W| > alpha
        const long long n = window.size();
        const auto num = static_cast<__int128>(config.alpha.numerator());
        const auto den = static_cast<__int128>(config.alpha.denominator());
        __int128 floor_div = num * n / den;
        min_support_ = static_cast<long long>(floor_div) + 1;

        std::set<std::string> vocab;
        for (const Snapshot& s : window.snapshots())
            for (const std::string& l : s.labels()) vocab.insert(l);
        names_.assign(vocab.begin(), vocab.end());

        for (const Snapshot& s : window.snapshots()) {
            DbGraph g;
            g.vlabels.reserve(s.node_count());
            for (int v = 0; v < s.node_count(); ++v)
                g.vlabels.push_back(intern(s.node_label(v)));
            g.adj.resize(s.node_count());
            g.edge_count = s.edge_count();
            for (int e = 0; e < s.edge_count(); ++e) {
                const auto& ed = s.edge(e);
                int el = intern(s.edge_label(e));
                g.adj[ed.u].push_back({ed.v, el, e});
                g.adj[ed.v].push_back({ed.u, el, e});
            }
            db_.push_back(std::move(g));
        }
    }

    void run() {
        if (min_support_ > window_.size()) return; // alpha = 1 mines nothing
        std::map<DfsEdge, Projected, EdgeLess> roots;
        for (int gid = 0; gid < static_cast<int>(db_.size()); ++gid) {
            const DbGraph& g = db_[gid];
            for (int u = 0; u < static_cast<int>(g.vlabels.size()); ++u)
                for (const DbEdge& e : g.adj[u]) {
                    if (g.vlabels[u] > g.vlabels[e.to]) continue;
                    DfsEdge t{0, 1, g.vlabels[u], e.label, g.vlabels[e.to]};
                    roots[t].push_back({gid, u, e.to, e.label, e.eid, nullptr});
                }
        }
        DfsCode code;
        for (auto& [edge, projected] : roots) {
            if (distinct_graphs(projected) < min_support_) continue;
            code.push_back(edge);
            grow(code, projected);
            code.pop_back();
        }
    }

private:
    int intern(const std::string& text) const {
        return static_cast<int>(std::lower_bound(names_.begin(), names_.end(), text) -
                                names_.begin());
    }

    void report(const DfsCode& code, const Projected& projected) {
        std::vector<std::string> node_labels;
        std::vector<std::tuple<int, int, std::string>> edges;
        for (const DfsEdge& e : code) {
            int need = std::max(e.from, e.to) + 1;
            if (static_cast<int>(node_labels.size()) < need) node_labels.resize(need);
            node_labels[e.from] = names_[e.from_label];
            node_labels[e.to] = names_[e.to_label];
            edges.emplace_back(e.from, e.to, names_[e.edge_label]);
        }
        out_.insert(Pattern::dense(std::move(node_labels), std::move(edges)),
                    distinct_graphs(projected));
    }

    void grow(DfsCode& code, const Projected& projected) {
        if (!is_min_code(code)) return;
        report(code, projected);
        if (static_cast<int>(code.size()) >= max_edges_) return;

        const std::vector<int> rmpath = rightmost_path(code);
        const int rightmost = rmpath.back();
        int next_index = 0;
        for (const DfsEdge& e : code) next_index = std::max({next_index, e.from, e.to});
        ++next_index;

        std::map<DfsEdge, Projected, EdgeLess> children;

        std::vector<int> dfs2g(next_index), g2dfs;
        std::vector<char> edge_used;
        for (const Pdfs& leaf : projected) {
            const DbGraph& g = db_[leaf.gid];
            // rebuild this embedding from the pdfs chain
            g2dfs.assign(g.vlabels.size(), -1);
            edge_used.assign(g.edge_count, 0);
            {
                const Pdfs* p = &leaf;
                for (int k = static_cast<int>(code.size()) - 1; k >= 0; --k, p = p->prev) {
                    dfs2g[code[k].from] = p->from_v;
                    dfs2g[code[k].to] = p->to_v;
                    edge_used[p->eid] = 1;
                }
            }
            for (int i : rmpath) g2dfs[dfs2g[i]] = i;
            // non-rightmost-path vertices matter only as "already mapped"
            {
                const Pdfs* p = &leaf;
                for (const Pdfs* q = p; q != nullptr; q = q->prev) {
                    if (g2dfs[q->from_v] == -1) g2dfs[q->from_v] = -2;
                    if (g2dfs[q->to_v] == -1) g2dfs[q->to_v] = -2;
                }
            }

            const int gr = dfs2g[rightmost];
            for (const DbEdge& e : g.adj[gr]) {
                if (edge_used[e.eid]) continue;
                int j = g2dfs[e.to];
                if (j >= 0 && j != rightmost) { // backward onto the rightmost path
                    DfsEdge t{rightmost, j, g.vlabels[gr], e.label, g.vlabels[e.to]};
                    children[t].push_back({leaf.gid, gr, e.to, e.label, e.eid, &leaf});
                }
            }
            for (int i : rmpath) {
                const int gi = dfs2g[i];
                for (const DbEdge& e : g.adj[gi]) {
                    if (edge_used[e.eid] || g2dfs[e.to] != -1) continue;
                    DfsEdge t{i, next_index, g.vlabels[gi], e.label, g.vlabels[e.to]};
                    children[t].push_back({leaf.gid, gi, e.to, e.label, e.eid, &leaf});
                }
            }
        }

        for (auto& [edge, child_projected] : children) {
            if (distinct_graphs(child_projected) < min_support_) continue;
            code.push_back(edge);
            grow(code, child_projected);
            code.pop_back();
        }
    }

    const TimeWindow& window_;
    FrequencyTable& out_;
    int max_edges_;
    long long min_support_ = 1;
    std::vector<std::string> names_;
    std::vector<DbGraph> db_;
};

} // namespace

FrequencyTable mine_frequent(const TimeWindow& window, const MiningConfig& config) {
    config.validate();
    FrequencyTable table(window.window_id(), window.size());
    Miner miner(window, config, table);
    miner.run();
    return table;
}

} // namespace evomine
