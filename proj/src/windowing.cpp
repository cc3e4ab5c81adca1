#include "evomine/windowing.hpp"

#include <cmath>
#include <stdexcept>

#include "evomine/errors.hpp"

namespace evomine {

TimeWindow::TimeWindow(int window_id, int start_index, std::vector<Snapshot> snapshots)
    : window_id_(window_id), start_index_(start_index), snapshots_(std::move(snapshots)) {
    if (snapshots_.empty()) throw std::invalid_argument("time window: empty");
    for (std::size_t i = 1; i < snapshots_.size(); ++i)
        if (snapshots_[i - 1].time_index() >= snapshots_[i].time_index())
            throw std::invalid_argument("time window: time indices not strictly increasing");
}

void PartitionConfig::validate() const {
    if (fixed_size < 1) throw ConfigError("window size must be at least 1");
    if (min_window < 1) throw ConfigError("min-window must be at least 1");
    if (min_window > max_window) throw ConfigError("min-window exceeds max-window");
    if (divergence_threshold <= 0.0 || divergence_threshold > 1.0)
        throw ConfigError("tau must lie in (0, 1]");
}

const char* cut_reason_name(CutReason r) {
    switch (r) {
    case CutReason::FixedSize: return "fixed_size";
    case CutReason::Divergence: return "divergence";
    case CutReason::MaxWindow: return "max_window";
    default: return "end_of_stream";
    }
}

LabelDistribution snapshot_distribution(const Snapshot& s) {
    LabelDistribution dist;
    if (s.node_count() == 0) return dist;

    std::map<std::string, int> node_counts, edge_counts;
    for (int v = 0; v < s.node_count(); ++v) ++node_counts[s.node_label(v)];
    for (int e = 0; e < s.edge_count(); ++e) ++edge_counts[s.edge_label(e)];

    double node_mass = edge_counts.empty() ? 1.0 : 0.5;
    double edge_mass = 1.0 - (edge_counts.empty() ? 1.0 : 0.5);
    for (auto& [label, n] : node_counts)
        dist[{'n', label}] = node_mass * n / s.node_count();
    if (!edge_counts.empty())
        for (auto& [label, n] : edge_counts)
            dist[{'e', label}] = edge_mass * n / s.edge_count();
    return dist;
}

double js_divergence(const LabelDistribution& a, const LabelDistribution& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return 1.0;

    auto kl_to_mid = [](const LabelDistribution& p, const LabelDistribution& q) {
        double kl = 0.0;
        for (auto& [key, pv] : p) {
            if (pv <= 0.0) continue;
            auto it = q.find(key);
            double mid = (pv + (it == q.end() ? 0.0 : it->second)) / 2.0;
            kl += pv * std::log2(pv / mid);
        }
        return kl;
    };
    double jsd = (kl_to_mid(a, b) + kl_to_mid(b, a)) / 2.0;
    return jsd < 0.0 ? 0.0 : jsd;
}

std::vector<TimeWindow> fixed_partition(const std::vector<Snapshot>& stream,
                                        const PartitionConfig& config) {
    PartitionConfig c = config;
    c.mode = PartitionMode::Fixed;
    return partition_stream(stream, c).windows;
}

std::vector<TimeWindow> adaptive_partition(const std::vector<Snapshot>& stream,
                                           const PartitionConfig& config) {
    PartitionConfig c = config;
    c.mode = PartitionMode::Adaptive;
    return partition_stream(stream, c).windows;
}

PartitionResult partition_stream(const std::vector<Snapshot>& stream,
                                 const PartitionConfig& config) {
    config.validate();
    if (stream.empty()) throw std::invalid_argument("partition: empty stream");
    for (std::size_t i = 1; i < stream.size(); ++i)
        if (stream[i - 1].time_index() >= stream[i].time_index())
            throw std::invalid_argument("partition: stream time indices not strictly increasing");

    PartitionResult result;
    auto close = [&](int start, int end, CutReason reason) { // [start, end)
        std::vector<Snapshot> chunk(stream.begin() + start, stream.begin() + end);
        result.windows.emplace_back(static_cast<int>(result.windows.size()), start,
                                    std::move(chunk));
        result.reasons.push_back(reason);
    };

    if (config.mode == PartitionMode::Fixed) {
        int n = static_cast<int>(stream.size());
        for (int start = 0; start < n; start += config.fixed_size) {
            int end = std::min(start + config.fixed_size, n);
            close(start, end, end - start == config.fixed_size ? CutReason::FixedSize
                                                              : CutReason::EndOfStream);
        }
        return result;
    }

    // Adaptive: single pass, running mean of the open window's distributions.
    int open_start = 0;
    LabelDistribution sum = snapshot_distribution(stream[0]);
    int open_size = 1;
    auto running_mean = [&]() {
        LabelDistribution mean = sum;
        for (auto& [key, v] : mean) v /= open_size;
        return mean;
    };
    for (std::size_t i = 1; i < stream.size(); ++i) {
        LabelDistribution next = snapshot_distribution(stream[i]);
        bool cut = false;
        CutReason reason = CutReason::EndOfStream;
        if (open_size >= config.min_window &&
            js_divergence(next, running_mean()) > config.divergence_threshold) {
            cut = true;
            reason = CutReason::Divergence;
        } else if (open_size >= config.max_window) {
            cut = true;
            reason = CutReason::MaxWindow;
        }
        if (cut) {
            close(open_start, static_cast<int>(i), reason);
            open_start = static_cast<int>(i);
            sum.clear();
            open_size = 0;
        }
        for (auto& [key, v] : next) sum[key] += v;
        ++open_size;
    }
    close(open_start, static_cast<int>(stream.size()), CutReason::EndOfStream);
    return result;
}

} // namespace evomine
