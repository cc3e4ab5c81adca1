#include "evomine/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "evomine/dfs_code.hpp"

namespace evomine {

Snapshot::Snapshot(long long time_index,
                   std::vector<std::pair<long long, std::string>> nodes,
                   std::vector<std::tuple<long long, long long, std::string>> edges)
    : time_index_(time_index) {
    if (time_index < 0) throw std::invalid_argument("snapshot: negative time index");

    std::map<long long, std::string> by_id;
    for (auto& [id, label] : nodes) {
        auto [it, inserted] = by_id.emplace(id, label);
        if (!inserted && it->second != label)
            throw std::invalid_argument("snapshot: conflicting labels for node " +
                                        std::to_string(id));
    }

    std::set<std::string> label_set;
    for (auto& [id, label] : by_id) label_set.insert(label);
    for (auto& [a, b, label] : edges) label_set.insert(label);
    labels_.assign(label_set.begin(), label_set.end());
    auto intern = [&](const std::string& text) {
        return static_cast<int>(std::lower_bound(labels_.begin(), labels_.end(), text) -
                                labels_.begin());
    };

    node_ids_.reserve(by_id.size());
    node_labels_.reserve(by_id.size());
    for (auto& [id, label] : by_id) {
        node_ids_.push_back(id);
        node_labels_.push_back(intern(label));
    }
    node_label_counts_.assign(labels_.size(), 0);
    for (int l : node_labels_) ++node_label_counts_[l];

    std::set<std::tuple<int, int, int>> seen;
    edges_.reserve(edges.size());
    for (auto& [a, b, label] : edges) {
        auto ia = index_of(a), ib = index_of(b);
        if (!ia || !ib)
            throw std::invalid_argument("snapshot: edge endpoint not among nodes");
        if (*ia == *ib)
            throw std::invalid_argument("snapshot: self-loop on node " + std::to_string(a));
        Edge e{std::min(*ia, *ib), std::max(*ia, *ib), intern(label)};
        if (!seen.insert({e.u, e.v, e.label}).second)
            throw std::invalid_argument("snapshot: duplicate edge " + std::to_string(a) + "-" +
                                        std::to_string(b) + " '" + label + "'");
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label);
    });

    adjacency_.assign(node_ids_.size(), {});
    for (int e = 0; e < edge_count(); ++e) {
        adjacency_[edges_[e].u].push_back({edges_[e].v, e});
        adjacency_[edges_[e].v].push_back({edges_[e].u, e});
    }
}

std::optional<int> Snapshot::index_of(long long external_id) const {
    auto it = std::lower_bound(node_ids_.begin(), node_ids_.end(), external_id);
    if (it == node_ids_.end() || *it != external_id) return std::nullopt;
    return static_cast<int>(it - node_ids_.begin());
}

std::optional<int> Snapshot::label_id(const std::string& text) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), text);
    if (it == labels_.end() || *it != text) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

Pattern::Pattern(std::vector<std::pair<long long, std::string>> nodes,
                 std::vector<std::tuple<long long, long long, std::string>> edges) {
    std::map<long long, std::string> by_id(nodes.begin(), nodes.end());
    if (by_id.size() != nodes.size()) {
        for (auto& [id, label] : nodes)
            if (by_id.at(id) != label)
                throw std::invalid_argument("pattern: conflicting labels for node " +
                                            std::to_string(id));
    }
    std::map<long long, int> dense;
    for (auto& [id, label] : by_id) {
        dense.emplace(id, static_cast<int>(node_labels_.size()));
        node_labels_.push_back(label);
    }
    for (auto& [a, b, label] : edges) {
        auto ia = dense.find(a), ib = dense.find(b);
        if (ia == dense.end() || ib == dense.end())
            throw std::invalid_argument("pattern: edge endpoint not among nodes");
        edges_.push_back({ia->second, ib->second, label});
    }
    validate_and_canonicalize();
}

Pattern Pattern::dense(std::vector<std::string> node_labels,
                       std::vector<std::tuple<int, int, std::string>> edges) {
    Pattern p;
    p.node_labels_ = std::move(node_labels);
    for (auto& [a, b, label] : edges) {
        if (a < 0 || b < 0 || a >= p.node_count() || b >= p.node_count())
            throw std::invalid_argument("pattern: edge endpoint not among nodes");
        p.edges_.push_back({a, b, label});
    }
    p.validate_and_canonicalize();
    return p;
}

void Pattern::validate_and_canonicalize() {
    if (node_labels_.empty()) throw std::invalid_argument("pattern: empty");
    if (edges_.empty()) throw std::invalid_argument("pattern: needs at least one edge");

    std::set<std::tuple<int, int, std::string>> seen;
    for (auto& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("pattern: self-loop");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v, e.label}).second)
            throw std::invalid_argument("pattern: duplicate edge");
    }

    // Interned label ranks follow lexicographic order, so the minimum DFS
    // code over ranks is the minimum over label strings.
    std::set<std::string> label_set(node_labels_.begin(), node_labels_.end());
    for (auto& e : edges_) label_set.insert(e.label);
    std::vector<std::string> names(label_set.begin(), label_set.end());
    auto intern = [&](const std::string& text) {
        return static_cast<int>(std::lower_bound(names.begin(), names.end(), text) -
                                names.begin());
    };

    SmallGraph g;
    g.vlabels.reserve(node_labels_.size());
    for (auto& l : node_labels_) g.vlabels.push_back(intern(l));
    for (auto& e : edges_) g.add_edge(e.u, e.v, intern(e.label));
    g.build_adjacency();
    if (!g.connected()) throw std::invalid_argument("pattern: not connected");

    code_ = code_to_string(min_dfs_code(g), names);
}

} // namespace evomine
