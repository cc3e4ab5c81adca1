#ifndef EVOMINE_WINDOWING_HPP
#define EVOMINE_WINDOWING_HPP

#include <map>
#include <string>
#include <vector>

#include "evomine/graph.hpp"

namespace evomine {

// A contiguous run of snapshots; the unit over which pattern frequency is
// measured. Consecutive window_ids partition adjacent stream segments.
class TimeWindow {
public:
    // Validates: nonempty, strictly increasing time indices.
    TimeWindow(int window_id, int start_index, std::vector<Snapshot> snapshots);

    int window_id() const { return window_id_; }
    int start_index() const { return start_index_; } // stream position of the first snapshot
    int size() const { return static_cast<int>(snapshots_.size()); }
    const std::vector<Snapshot>& snapshots() const { return snapshots_; }
    const Snapshot& snapshot(int i) const { return snapshots_[i]; }

private:
    int window_id_;
    int start_index_;
    std::vector<Snapshot> snapshots_;
};

enum class PartitionMode { Fixed, Adaptive };

struct PartitionConfig {
    PartitionMode mode = PartitionMode::Fixed;
    int fixed_size = 10;
    double divergence_threshold = 0.1; // tau, adaptive mode, in (0, 1]
    int min_window = 2;
    int max_window = 1000;

    // Throws ConfigError on violated invariants.
    void validate() const;
};

// Why a window was closed; reported in windows.csv.
enum class CutReason { FixedSize, Divergence, MaxWindow, EndOfStream };
const char* cut_reason_name(CutReason r);

struct PartitionResult {
    std::vector<TimeWindow> windows;
    std::vector<CutReason> reasons; // parallel to windows
};

// Sparse distribution over the label vocabulary; keys are (kind, label)
// with kind 'n' for node labels and 'e' for edge labels. Sums to 1, or is
// empty for a snapshot with no nodes.
using LabelDistribution = std::map<std::pair<char, std::string>, double>;

// Node-label mass and edge-label mass each normalized to 0.5; if one side is
// empty the other carries the full mass.
LabelDistribution snapshot_distribution(const Snapshot& snapshot);

// Jensen-Shannon divergence, log base 2, in [0, 1]. Two empty distributions
// diverge by 0; empty against nonempty by 1.
double js_divergence(const LabelDistribution& a, const LabelDistribution& b);

// Consecutive windows of fixed_size snapshots; a shorter remainder window is
// kept. Throws std::invalid_argument on an empty stream.
std::vector<TimeWindow> fixed_partition(const std::vector<Snapshot>& stream,
                                        const PartitionConfig& config);

// Cuts before any snapshot whose label distribution diverges from the open
// window's running mean by more than divergence_threshold, once the window
// holds min_window snapshots; a cut is forced at max_window.
std::vector<TimeWindow> adaptive_partition(const std::vector<Snapshot>& stream,
                                           const PartitionConfig& config);

// Mode dispatch, with cut reasons for reporting.
PartitionResult partition_stream(const std::vector<Snapshot>& stream,
                                 const PartitionConfig& config);

} // namespace evomine

#endif
