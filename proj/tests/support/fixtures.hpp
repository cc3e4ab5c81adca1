#ifndef EVOMINE_TESTS_FIXTURES_HPP
#define EVOMINE_TESTS_FIXTURES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "evomine/graph.hpp"
#include "evomine/windowing.hpp"

// Deterministic fixture generators. Random choices go through pick() (modulo
// on the raw engine output) so the sequences are identical on every platform
// and standard library.
namespace fixtures {

inline int pick(std::mt19937& engine, int n) {
    return static_cast<int>(engine() % static_cast<unsigned>(n));
}

// Fisher-Yates with pick(), for platform-stable shuffles.
template <typename T>
void shuffle(std::mt19937& engine, std::vector<T>& values) {
    for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
        std::swap(values[i], values[static_cast<std::size_t>(pick(engine, i + 1))]);
}

evomine::Snapshot random_snapshot(std::mt19937& engine, long long time, int max_nodes,
                                  int max_edges, const std::vector<std::string>& node_labels,
                                  const std::vector<std::string>& edge_labels);

evomine::TimeWindow random_window(std::mt19937& engine, int window_id, int max_snapshots,
                                  int max_nodes, int max_edges,
                                  const std::vector<std::string>& node_labels,
                                  const std::vector<std::string>& edge_labels);

// Connected: a random tree plus up to max_extra_edges additional edges.
// At least one edge.
evomine::Pattern random_pattern(std::mt19937& engine, int max_nodes, int max_extra_edges,
                                const std::vector<std::string>& node_labels,
                                const std::vector<std::string>& edge_labels);

// The same pattern under a random node relabeling.
evomine::Pattern permuted(std::mt19937& engine, const evomine::Pattern& pattern);

// Category sequence with none_percent% undefined positions.
std::vector<std::optional<std::string>> random_categories(
    std::mt19937& engine, int length, const std::vector<std::string>& alphabet,
    int none_percent);

// 20 snapshots. A constant background edge everywhere; a planted edge pattern
// in 1 of the first 10 snapshots and 9 of the last 10, so with window size 10
// its growth rate is exactly 9.
std::vector<evomine::Snapshot> emerging_stream();

// Like emerging_stream but 3 of 10 then 9 of 10: growth rate exactly 3.
std::vector<evomine::Snapshot> boundary_stream();

// n identical snapshots (two edges); no change of any kind.
std::vector<evomine::Snapshot> constant_stream(int n);

// 100 snapshots, 20 nodes, 40 edges each; the dominant edge label flips from
// "x" to "y" at index 50 (90% dominance both sides).
std::vector<evomine::Snapshot> label_shift_stream(unsigned seed);

// 100 snapshots, 100 nodes, 300 edges, labels {A,B,C} x {x,y,z}.
std::vector<evomine::Snapshot> scale_stream(unsigned seed);

} // namespace fixtures

#endif
