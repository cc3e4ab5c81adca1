#include "support/fixtures.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace fixtures {

using evomine::Pattern;
using evomine::Snapshot;
using evomine::TimeWindow;

Snapshot random_snapshot(std::mt19937& engine, long long time, int max_nodes, int max_edges,
                         const std::vector<std::string>& node_labels,
                         const std::vector<std::string>& edge_labels) {
    const int n = 1 + pick(engine, max_nodes);
    std::vector<std::pair<long long, std::string>> nodes;
    for (int i = 0; i < n; ++i)
        nodes.emplace_back(i, node_labels[pick(engine, static_cast<int>(node_labels.size()))]);

    std::vector<std::tuple<long long, long long, std::string>> edges;
    std::set<std::tuple<long long, long long, std::string>> seen;
    if (n >= 2) {
        const int wanted = pick(engine, max_edges + 1);
        for (int attempt = 0; attempt < 4 * wanted && static_cast<int>(edges.size()) < wanted;
             ++attempt) {
            long long u = pick(engine, n);
            long long v = pick(engine, n);
            if (u == v) continue;
            std::string label = edge_labels[pick(engine, static_cast<int>(edge_labels.size()))];
            if (!seen.insert({std::min(u, v), std::max(u, v), label}).second) continue;
            edges.emplace_back(u, v, std::move(label));
        }
    }
    return Snapshot(time, std::move(nodes), std::move(edges));
}

TimeWindow random_window(std::mt19937& engine, int window_id, int max_snapshots, int max_nodes,
                         int max_edges, const std::vector<std::string>& node_labels,
                         const std::vector<std::string>& edge_labels) {
    const int count = 1 + pick(engine, max_snapshots);
    std::vector<Snapshot> snapshots;
    for (int t = 0; t < count; ++t)
        snapshots.push_back(
            random_snapshot(engine, t, max_nodes, max_edges, node_labels, edge_labels));
    return TimeWindow(window_id, 0, std::move(snapshots));
}

Pattern random_pattern(std::mt19937& engine, int max_nodes, int max_extra_edges,
                       const std::vector<std::string>& node_labels,
                       const std::vector<std::string>& edge_labels) {
    const int n = 2 + pick(engine, std::max(1, max_nodes - 1));
    auto node_label = [&] {
        return node_labels[pick(engine, static_cast<int>(node_labels.size()))];
    };
    auto edge_label = [&] {
        return edge_labels[pick(engine, static_cast<int>(edge_labels.size()))];
    };
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(node_label());

    std::vector<std::tuple<int, int, std::string>> edges;
    std::set<std::tuple<int, int, std::string>> seen;
    for (int v = 1; v < n; ++v) {
        int parent = pick(engine, v);
        std::string label = edge_label();
        seen.insert({parent, v, label});
        edges.emplace_back(parent, v, std::move(label));
    }
    const int extra = pick(engine, max_extra_edges + 1);
    for (int attempt = 0; attempt < 4 * extra + 4 && extra > 0 &&
                          static_cast<int>(edges.size()) < n - 1 + extra;
         ++attempt) {
        int u = pick(engine, n);
        int v = pick(engine, n);
        if (u == v) continue;
        std::string label = edge_label();
        if (!seen.insert({std::min(u, v), std::max(u, v), label}).second) continue;
        edges.emplace_back(u, v, std::move(label));
    }
    return Pattern::dense(std::move(labels), std::move(edges));
}

Pattern permuted(std::mt19937& engine, const Pattern& pattern) {
    const int n = pattern.node_count();
    std::vector<long long> new_id(n);
    for (int i = 0; i < n; ++i) new_id[i] = i;
    std::vector<long long> ids = new_id;
    shuffle(engine, ids);
    for (int i = 0; i < n; ++i) new_id[i] = ids[i];

    std::vector<std::pair<long long, std::string>> nodes;
    for (int i = 0; i < n; ++i) nodes.emplace_back(new_id[i], pattern.node_label(i));
    std::vector<std::tuple<long long, long long, std::string>> edges;
    for (const Pattern::Edge& e : pattern.edges())
        edges.emplace_back(new_id[e.u], new_id[e.v], e.label);
    return Pattern(std::move(nodes), std::move(edges));
}

std::vector<std::optional<std::string>> random_categories(
    std::mt19937& engine, int length, const std::vector<std::string>& alphabet,
    int none_percent) {
    std::vector<std::optional<std::string>> out(length);
    for (int i = 0; i < length; ++i) {
        if (pick(engine, 100) < none_percent) continue;
        out[i] = alphabet[pick(engine, static_cast<int>(alphabet.size()))];
    }
    return out;
}

namespace {

// Background: nodes 1,2 labeled A joined by a "bg" edge, present always.
// Planted: nodes 900 (P) and 901 (Q) joined by a "pe" edge.
Snapshot planted_snapshot(long long time, bool planted) {
    std::vector<std::pair<long long, std::string>> nodes{{1, "A"}, {2, "A"}};
    std::vector<std::tuple<long long, long long, std::string>> edges{{1, 2, "bg"}};
    if (planted) {
        nodes.emplace_back(900, "P");
        nodes.emplace_back(901, "Q");
        edges.emplace_back(900, 901, "pe");
    }
    return Snapshot(time, std::move(nodes), std::move(edges));
}

} // namespace

std::vector<Snapshot> emerging_stream() {
    std::vector<Snapshot> out;
    for (int t = 0; t < 20; ++t) {
        bool planted = (t == 9) || (t >= 10 && t <= 18);
        out.push_back(planted_snapshot(t, planted));
    }
    return out;
}

std::vector<Snapshot> boundary_stream() {
    std::vector<Snapshot> out;
    for (int t = 0; t < 20; ++t) {
        bool planted = (t >= 7 && t <= 9) || (t >= 10 && t <= 18);
        out.push_back(planted_snapshot(t, planted));
    }
    return out;
}

std::vector<Snapshot> constant_stream(int n) {
    std::vector<Snapshot> out;
    for (int t = 0; t < n; ++t)
        out.push_back(Snapshot(t, {{1, "A"}, {2, "B"}, {3, "A"}},
                               {{1, 2, "x"}, {2, 3, "y"}}));
    return out;
}

std::vector<Snapshot> label_shift_stream(unsigned seed) {
    std::mt19937 engine(seed);
    std::vector<Snapshot> out;
    for (int t = 0; t < 100; ++t) {
        const std::string major = t < 50 ? "x" : "y";
        const std::string minor = t < 50 ? "y" : "x";
        std::vector<std::pair<long long, std::string>> nodes;
        for (int i = 0; i < 20; ++i) nodes.emplace_back(i, "N");
        std::vector<std::tuple<long long, long long, std::string>> edges;
        std::set<std::tuple<long long, long long, std::string>> seen;
        while (static_cast<int>(edges.size()) < 40) {
            long long u = pick(engine, 20);
            long long v = pick(engine, 20);
            if (u == v) continue;
            const std::string& label = pick(engine, 10) < 9 ? major : minor;
            if (!seen.insert({std::min(u, v), std::max(u, v), label}).second) continue;
            edges.emplace_back(u, v, label);
        }
        out.push_back(Snapshot(t, std::move(nodes), std::move(edges)));
    }
    return out;
}

std::vector<Snapshot> scale_stream(unsigned seed) {
    std::mt19937 engine(seed);
    const std::vector<std::string> node_labels{"A", "B", "C"};
    const std::vector<std::string> edge_labels{"x", "y", "z"};
    std::vector<Snapshot> out;
    for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<long long, std::string>> nodes;
        for (int i = 0; i < 100; ++i) nodes.emplace_back(i, node_labels[pick(engine, 3)]);
        std::vector<std::tuple<long long, long long, std::string>> edges;
        std::set<std::tuple<long long, long long, std::string>> seen;
        int attempts = 0;
        while (static_cast<int>(edges.size()) < 300 && ++attempts < 5000) {
            long long u = pick(engine, 100);
            long long v = pick(engine, 100);
            if (u == v) continue;
            const std::string& label = edge_labels[pick(engine, 3)];
            if (!seen.insert({std::min(u, v), std::max(u, v), label}).second) continue;
            edges.emplace_back(u, v, label);
        }
        out.push_back(Snapshot(t, std::move(nodes), std::move(edges)));
    }
    return out;
}

} // namespace fixtures
