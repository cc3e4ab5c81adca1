#include "evomine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "evomine/errors.hpp"

namespace evomine::oracle {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(std::string("oracle limit exceeded: ") + message);
}

// Serialization of a labeled graph under one node ordering.
std::string serialize(const std::vector<std::string>& labels,
                      const std::vector<std::tuple<int, int, std::string>>& edges) {
    std::string s;
    for (const std::string& l : labels) {
        s += l;
        s += '\x01';
    }
    std::vector<std::tuple<int, int, std::string>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [u, v, l] : sorted) {
        s += std::to_string(u);
        s += '\x02';
        s += std::to_string(v);
        s += '\x02';
        s += l;
        s += '\x01';
    }
    return s;
}

// Lexicographically smallest serialization over all node permutations:
// a canonical form that depends on nothing but the isomorphism class.
std::string permutation_canonical_key(
    const std::vector<std::string>& labels,
    const std::vector<std::tuple<int, int, std::string>>& edges) {
    const int k = static_cast<int>(labels.size());
    std::vector<int> order(k); // order[new index] = old index
    std::iota(order.begin(), order.end(), 0);
    std::string best;
    do {
        std::vector<int> position(k); // old index -> new index
        for (int i = 0; i < k; ++i) position[order[i]] = i;
        std::vector<std::string> plabels(k);
        for (int i = 0; i < k; ++i) plabels[i] = labels[order[i]];
        std::vector<std::tuple<int, int, std::string>> pedges;
        for (const auto& [u, v, l] : edges) {
            int a = position[u], b = position[v];
            pedges.emplace_back(std::min(a, b), std::max(a, b), l);
        }
        std::string s = serialize(plabels, pedges);
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

bool mapping_works(const Pattern& pattern, const Snapshot& snapshot,
                   const std::vector<int>& assign) {
    for (int i = 0; i < pattern.node_count(); ++i)
        if (pattern.node_label(i) != snapshot.node_label(assign[i])) return false;
    for (const Pattern::Edge& pe : pattern.edges()) {
        int a = assign[pe.u], b = assign[pe.v];
        bool found = false;
        for (const Snapshot::Edge& se : snapshot.edges()) {
            if (((se.u == a && se.v == b) || (se.u == b && se.v == a)) &&
                snapshot.label_text(se.label) == pe.label) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool try_assign(const Pattern& pattern, const Snapshot& snapshot, std::vector<int>& assign,
                std::vector<bool>& used, int next) {
    if (next == pattern.node_count()) return mapping_works(pattern, snapshot, assign);
    for (int cand = 0; cand < snapshot.node_count(); ++cand) {
        if (used[cand]) continue;
        if (snapshot.node_label(cand) != pattern.node_label(next)) continue;
        used[cand] = true;
        assign[next] = cand;
        if (try_assign(pattern, snapshot, assign, used, next + 1)) {
            used[cand] = false;
            return true;
        }
        used[cand] = false;
    }
    return false;
}

} // namespace

bool oracle_isomorphic(const Pattern& pattern, const Snapshot& snapshot) {
    require(snapshot.node_count() <= kMaxSnapshotNodes, "snapshot too large for oracle matching");
    require(pattern.node_count() <= kMaxPatternNodes, "pattern too large for oracle matching");
    if (pattern.node_count() > snapshot.node_count()) return false;
    std::vector<int> assign(pattern.node_count());
    std::vector<bool> used(snapshot.node_count(), false);
    return try_assign(pattern, snapshot, assign, used, 0);
}

FrequencyTable oracle_mine(const TimeWindow& window, const MiningConfig& config) {
    config.validate();
    require(window.size() <= kMaxWindowSnapshots, "window too large for oracle mining");
    require(config.max_edges <= kMaxMineEdges, "max-edges too large for oracle mining");
    for (const Snapshot& s : window.snapshots()) {
        require(s.node_count() <= kMaxMineNodes, "snapshot too large for oracle mining");
        require(s.edge_count() <= 16, "snapshot has too many edges for oracle mining");
    }

    // One representative pattern per isomorphism class seen anywhere in the
    // window, keyed by the permutation-canonical serialization. A pattern
    // occurs in a snapshot exactly when some connected edge subset of that
    // snapshot lies in its class, so the per-snapshot key sets already give
    // the support counts.
    std::map<std::string, Pattern> classes;
    std::vector<std::set<std::string>> keys_per_snapshot;
    for (const Snapshot& s : window.snapshots()) {
        std::set<std::string>& snapshot_keys = keys_per_snapshot.emplace_back();
        const int ec = s.edge_count();
        for (std::uint32_t mask = 1; mask < (1u << ec); ++mask) {
            if (static_cast<int>(std::popcount(mask)) > config.max_edges) continue;
            // Collect touched nodes and re-index densely.
            std::vector<int> touched;
            for (int e = 0; e < ec; ++e) {
                if (!(mask & (1u << e))) continue;
                touched.push_back(s.edge(e).u);
                touched.push_back(s.edge(e).v);
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            auto dense_of = [&](int node) {
                return static_cast<int>(std::lower_bound(touched.begin(), touched.end(), node) -
                                        touched.begin());
            };
            std::vector<std::string> labels;
            for (int node : touched) labels.push_back(s.node_label(node));
            std::vector<std::tuple<int, int, std::string>> edges;
            for (int e = 0; e < ec; ++e)
                if (mask & (1u << e))
                    edges.emplace_back(dense_of(s.edge(e).u), dense_of(s.edge(e).v),
                                       s.edge_label(e));
            // Connectivity by repeated sweep (naive transitive closure).
            std::vector<bool> reach(touched.size(), false);
            reach[0] = true;
            for (std::size_t pass = 0; pass < touched.size(); ++pass)
                for (const auto& [u, v, l] : edges) {
                    if (reach[u]) reach[v] = true;
                    if (reach[v]) reach[u] = true;
                }
            if (std::find(reach.begin(), reach.end(), false) != reach.end()) continue;

            std::string key = permutation_canonical_key(labels, edges);
            snapshot_keys.insert(key);
            if (!classes.count(key)) classes.emplace(key, Pattern::dense(labels, edges));
        }
    }

    FrequencyTable table(window.window_id(), window.size());
    std::set<std::string> emitted_codes;
    for (const auto& [key, pattern] : classes) {
        long long support = 0;
        for (const std::set<std::string>& snapshot_keys : keys_per_snapshot)
            if (snapshot_keys.count(key)) ++support;
        if (Rational(support, window.size()) > config.alpha) {
            if (!emitted_codes.insert(pattern.code()).second)
                throw InternalError("canonical code collision: two non-isomorphic patterns "
                                    "share a code");
            table.insert(pattern, support);
        }
    }
    return table;
}

std::vector<PeriodicChain> oracle_periods(
    const std::vector<std::optional<std::string>>& categories, int period_max, int jitter,
    int min_repetitions) {
    require(static_cast<int>(categories.size()) <= kMaxSequenceLength,
            "sequence too long for oracle period search");
    if (period_max < 1) throw std::invalid_argument("period_max must be >= 1");
    if (jitter < 0) throw std::invalid_argument("jitter must be >= 0");
    if (min_repetitions < 2) throw std::invalid_argument("min_repetitions must be >= 2");
    const int n = static_cast<int>(categories.size());

    std::vector<PeriodicChain> out;
    for (int period = 1; period <= period_max; ++period) {
        // An index extends a chain when it matches the category, lies within
        // jitter of the anchor grid position and of previous + period, and
        // comes strictly after the previous index.
        auto extensions = [&](const std::vector<int>& chain) {
            std::vector<int> exts;
            const int last = chain.back();
            const long long grid =
                chain.front() + static_cast<long long>(chain.size()) * period;
            for (int i = last + 1; i < n; ++i) {
                if (!categories[i] || *categories[i] != *categories[chain.front()]) continue;
                if (std::llabs(i - grid) > jitter) continue;
                if (std::abs(i - last - period) > jitter) continue;
                exts.push_back(i);
            }
            return exts;
        };

        // Breadth-first enumeration of every admissible chain.
        std::set<std::vector<int>> all;
        std::vector<std::vector<int>> frontier;
        for (int i = 0; i < n; ++i)
            if (categories[i]) frontier.push_back({i});
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const std::vector<int>& chain : frontier) {
                all.insert(chain);
                for (int ext : extensions(chain)) {
                    std::vector<int> grown = chain;
                    grown.push_back(ext);
                    next.push_back(std::move(grown));
                }
                if (all.size() + next.size() > 2000000)
                    throw InternalError("oracle period search exceeded the safety cap");
            }
            frontier = std::move(next);
        }

        std::vector<std::vector<int>> emitted;
        for (const std::vector<int>& chain : all)
            if (static_cast<int>(chain.size()) >= min_repetitions && extensions(chain).empty())
                emitted.push_back(chain);
        for (const std::vector<int>& chain : emitted) {
            bool subsumed = false;
            for (const std::vector<int>& other : emitted) {
                if (other.size() > chain.size() &&
                    *categories[other.front()] == *categories[chain.front()] &&
                    std::includes(other.begin(), other.end(), chain.begin(), chain.end())) {
                    subsumed = true;
                    break;
                }
            }
            if (!subsumed) out.push_back({period, *categories[chain.front()], chain});
        }
    }
    std::sort(out.begin(), out.end(), [](const PeriodicChain& a, const PeriodicChain& b) {
        if (a.period != b.period) return a.period < b.period;
        if (a.category != b.category) return a.category < b.category;
        return a.occurrences < b.occurrences;
    });
    return out;
}

} // namespace evomine::oracle
