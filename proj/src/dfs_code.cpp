#include "evomine/dfs_code.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

#include "evomine/errors.hpp"

namespace evomine {

bool dfs_edge_less(const DfsEdge& a, const DfsEdge& b) {
    bool af = a.forward(), bf = b.forward();
    if (af != bf) return !af; // backward precedes forward
    if (!af) {
        // both backward: smaller target first, then edge label
        return std::tie(a.to, a.edge_label) < std::tie(b.to, b.edge_label);
    }
    // both forward: deeper source first, then label triple
    if (a.from != b.from) return a.from > b.from;
    return std::tie(a.from_label, a.edge_label, a.to_label) <
           std::tie(b.from_label, b.edge_label, b.to_label);
}

bool dfs_code_less(const DfsCode& a, const DfsCode& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (dfs_edge_less(a[i], b[i])) return true;
        if (dfs_edge_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

std::vector<int> rightmost_path(const DfsCode& code) {
    // walk forward edges from the rightmost vertex back to the root
    std::vector<int> rev;
    int want = -1;
    for (int i = static_cast<int>(code.size()) - 1; i >= 0; --i) {
        const DfsEdge& e = code[i];
        if (e.forward() && (want == -1 || e.to == want)) {
            rev.push_back(e.to);
            want = e.from;
        }
    }
    rev.push_back(want == -1 ? 0 : want);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

void SmallGraph::add_edge(int u, int v, int label) {
    edges.push_back({u, v, label});
}

void SmallGraph::build_adjacency() {
    adj.assign(vlabels.size(), {});
    for (int e = 0; e < edge_count(); ++e) {
        adj[edges[e].u].push_back({edges[e].v, e});
        adj[edges[e].v].push_back({edges[e].u, e});
    }
}

bool SmallGraph::connected() const {
    if (vlabels.empty()) return false;
    std::vector<char> seen(vlabels.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v]) {
            (void)e;
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == node_count();
}

namespace {

// A partial embedding of the code prefix being built: vmap takes DFS index to
// graph vertex, inv the reverse, used marks consumed edge instances.
struct Embedding {
    std::vector<int> vmap;
    std::vector<int> inv; // graph vertex -> dfs index or -1
    std::uint64_t used = 0;

    bool edge_used(int e) const { return used >> e & 1; }
};

struct Candidate {
    int edge_id;
    int graph_to; // target graph vertex
};

} // namespace

DfsCode min_dfs_code(const SmallGraph& g) {
    if (g.node_count() == 0 || g.edge_count() == 0)
        throw InternalError("min_dfs_code needs a nonempty graph with edges");
    if (g.edge_count() > 64)
        throw InternalError("min_dfs_code supports at most 64 edges");

    const int m = g.edge_count();
    DfsCode code;
    std::vector<Embedding> embs;

    // Seed with the minimal oriented first edge.
    DfsEdge best{};
    bool have = false;
    for (int e = 0; e < m; ++e) {
        const auto& ed = g.edges[e];
        for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            DfsEdge t{0, 1, g.vlabels[a], ed.label, g.vlabels[b]};
            if (!have || dfs_edge_less(t, best)) {
                best = t;
                have = true;
            }
        }
    }
    code.push_back(best);
    for (int e = 0; e < m; ++e) {
        const auto& ed = g.edges[e];
        for (auto [a, b] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            if (g.vlabels[a] != best.from_label || ed.label != best.edge_label ||
                g.vlabels[b] != best.to_label)
                continue;
            Embedding em;
            em.vmap = {a, b};
            em.inv.assign(g.node_count(), -1);
            em.inv[a] = 0;
            em.inv[b] = 1;
            em.used = std::uint64_t(1) << e;
            embs.push_back(std::move(em));
        }
    }

    while (static_cast<int>(code.size()) < m) {
        std::vector<int> rmpath = rightmost_path(code);
        int rightmost = rmpath.back();
        int next_index = 0;
        for (const DfsEdge& e : code) next_index = std::max({next_index, e.from, e.to});
        ++next_index;

        DfsEdge min_edge{};
        bool found = false;

        auto consider = [&](const DfsEdge& t) {
            if (!found || dfs_edge_less(t, min_edge)) {
                min_edge = t;
                found = true;
            }
        };

        for (const Embedding& em : embs) {
            int gr = em.vmap[rightmost];
            // backward: rightmost vertex to an earlier rightmost-path vertex
            for (auto [nbr, e] : g.adj[gr]) {
                if (em.edge_used(e)) continue;
                int j = em.inv[nbr];
                if (j < 0 || j == rightmost) continue;
                if (std::find(rmpath.begin(), rmpath.end(), j) == rmpath.end()) continue;
                consider({rightmost, j, g.vlabels[gr], g.edges[e].label, g.vlabels[nbr]});
            }
            // forward: any rightmost-path vertex to an unmapped vertex
            for (int i : rmpath) {
                int gi = em.vmap[i];
                for (auto [nbr, e] : g.adj[gi]) {
                    if (em.edge_used(e) || em.inv[nbr] >= 0) continue;
                    consider({i, next_index, g.vlabels[gi], g.edges[e].label, g.vlabels[nbr]});
                }
            }
        }
        if (!found) throw InternalError("min_dfs_code: disconnected graph");

        // Keep every embedding that realizes the chosen edge.
        std::vector<Embedding> next_embs;
        for (const Embedding& em : embs) {
            if (min_edge.forward()) {
                int gi = em.vmap[min_edge.from];
                for (auto [nbr, e] : g.adj[gi]) {
                    if (em.edge_used(e) || em.inv[nbr] >= 0) continue;
                    if (g.edges[e].label != min_edge.edge_label ||
                        g.vlabels[nbr] != min_edge.to_label)
                        continue;
                    Embedding ex = em;
                    ex.vmap.push_back(nbr);
                    ex.inv[nbr] = min_edge.to;
                    ex.used |= std::uint64_t(1) << e;
                    next_embs.push_back(std::move(ex));
                }
            } else {
                int gr = em.vmap[min_edge.from];
                int target = em.vmap[min_edge.to];
                for (auto [nbr, e] : g.adj[gr]) {
                    if (em.edge_used(e) || nbr != target) continue;
                    if (g.edges[e].label != min_edge.edge_label) continue;
                    Embedding ex = em;
                    ex.used |= std::uint64_t(1) << e;
                    next_embs.push_back(std::move(ex));
                }
            }
        }
        code.push_back(min_edge);
        embs = std::move(next_embs);
    }
    return code;
}

SmallGraph graph_of_code(const DfsCode& code) {
    SmallGraph g;
    for (const DfsEdge& e : code) {
        int need = std::max(e.from, e.to) + 1;
        if (static_cast<int>(g.vlabels.size()) < need) g.vlabels.resize(need, -1);
        g.vlabels[e.from] = e.from_label;
        g.vlabels[e.to] = e.to_label;
        g.add_edge(e.from, e.to, e.edge_label);
    }
    g.build_adjacency();
    return g;
}

bool is_min_code(const DfsCode& code) {
    return min_dfs_code(graph_of_code(code)) == code;
}

namespace {

void append_escaped(std::string& out, const std::string& label) {
    for (char c : label) {
        if (c == '\\' || c == '(' || c == ')' || c == ',' || c == ';') out.push_back('\\');
        out.push_back(c);
    }
}

} // namespace

std::string code_to_string(const DfsCode& code, const std::vector<std::string>& label_names) {
    std::string out;
    bool first = true;
    for (const DfsEdge& e : code) {
        if (!first) out.push_back(';');
        first = false;
        out.push_back('(');
        out += std::to_string(e.from);
        out.push_back(',');
        out += std::to_string(e.to);
        out.push_back(',');
        append_escaped(out, label_names[e.from_label]);
        out.push_back(',');
        append_escaped(out, label_names[e.edge_label]);
        out.push_back(',');
        append_escaped(out, label_names[e.to_label]);
        out.push_back(')');
    }
    return out;
}

} // namespace evomine
