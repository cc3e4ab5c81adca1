#ifndef EVOMINE_GRAPH_HPP
#define EVOMINE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace evomine {

// Label for inputs that carry none. Labels are mandatory on nodes and edges;
// unlabeled data is loaded under this sentinel.
inline const std::string kNoLabel = "∅"; // ∅

// One observation of the network at a discrete time point: an undirected
// labeled graph. Node and edge labels are interned per snapshot; interned ids
// are assigned in lexicographic label order, so id comparisons agree with
// string comparisons.
//
// Immutable after construction; safe to share across threads.
class Snapshot {
public:
    struct Edge {
        int u = 0, v = 0; // dense node indices, u < v
        int label = 0;    // interned label id
    };

    // nodes: (external node id, label). edges: (id a, id b, label).
    // Validates: endpoints exist, no self-loops, no duplicate
    // (endpoint pair, label) edges, time_index >= 0.
    // Throws std::invalid_argument on violation.
    Snapshot(long long time_index,
             std::vector<std::pair<long long, std::string>> nodes,
             std::vector<std::tuple<long long, long long, std::string>> edges);

    long long time_index() const { return time_index_; }
    int node_count() const { return static_cast<int>(node_labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Dense index <-> external id. Dense indices follow ascending external id.
    long long node_id(int idx) const { return node_ids_[idx]; }
    std::optional<int> index_of(long long external_id) const;

    int node_label_id(int idx) const { return node_labels_[idx]; }
    const std::string& node_label(int idx) const { return labels_[node_labels_[idx]]; }

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& edge_label(int e) const { return labels_[edges_[e].label]; }

    // (neighbor dense index, edge index) pairs.
    std::span<const std::pair<int, int>> neighbors(int idx) const {
        return {adjacency_[idx].data(), adjacency_[idx].size()};
    }
    int degree(int idx) const { return static_cast<int>(adjacency_[idx].size()); }

    // Interned label table (sorted lexicographically, shared by nodes and edges).
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label_text(int id) const { return labels_[id]; }
    std::optional<int> label_id(const std::string& text) const;

    // Number of nodes carrying the given label id.
    int node_label_count(int label_id) const { return node_label_counts_[label_id]; }

private:
    long long time_index_;
    std::vector<std::string> labels_;     // sorted unique
    std::vector<long long> node_ids_;     // sorted ascending
    std::vector<int> node_labels_;        // by dense index
    std::vector<int> node_label_counts_;  // by label id
    std::vector<Edge> edges_;             // sorted by (u, v, label)
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// A connected labeled graph used as the unit of change description. Node ids
// are dense (0..n-1). Carries its canonical code, computed at construction:
// two patterns are isomorphic exactly when their codes are equal.
//
// Immutable after construction.
class Pattern {
public:
    struct Edge {
        int u = 0, v = 0;
        std::string label;
    };

    // External-id form, mirroring Snapshot's constructor. Throws
    // std::invalid_argument when empty, disconnected, or edge-invalid.
    Pattern(std::vector<std::pair<long long, std::string>> nodes,
            std::vector<std::tuple<long long, long long, std::string>> edges);

    // Dense form: node i has label node_labels[i].
    static Pattern dense(std::vector<std::string> node_labels,
                         std::vector<std::tuple<int, int, std::string>> edges);

    int node_count() const { return static_cast<int>(node_labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& node_label(int idx) const { return node_labels_[idx]; }
    const std::vector<std::string>& node_labels() const { return node_labels_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Canonical minimum-DFS-code string.
    const std::string& code() const { return code_; }

    bool operator==(const Pattern& o) const { return code_ == o.code_; }

private:
    Pattern() = default;
    void validate_and_canonicalize();

    std::vector<std::string> node_labels_;
    std::vector<Edge> edges_;
    std::string code_;
};

// Canonical code of a pattern; identical for isomorphic patterns, distinct
// for non-isomorphic ones, stable across runs and platforms.
inline const std::string& canonical_code(const Pattern& p) { return p.code(); }

} // namespace evomine

#endif
