#ifndef EVOMINE_PIPELINE_HPP
#define EVOMINE_PIPELINE_HPP

#include <string>
#include <vector>

#include "evomine/detect.hpp"
#include "evomine/miner.hpp"
#include "evomine/windowing.hpp"

namespace evomine {

struct RunConfig {
    PartitionConfig partition;
    MiningConfig mining;
    DetectConfig detect;
    bool run_emerging = true;
    bool run_trends = true;
    bool run_periodic = true;
    std::string output_dir = ".";
    int threads = 0; // 0 = hardware concurrency

    void validate() const;
};

// Which report files a run writes; subcommands select subsets.
struct ReportSelection {
    bool windows_csv = true;
    bool patterns_csv = true;
    bool changes_jsonl = true;
    bool summary_txt = true;
};

struct RunReport {
    int window_count = 0;
    std::size_t pattern_count = 0; // union of frequent patterns across windows
    long long emerging = 0;
    long long trends = 0;
    long long periodic = 0;
    long long periodic_stable_suppressed = 0;
};

// Frequent patterns of every window, mined in parallel (threads = 0 uses
// hardware concurrency). Result order matches the window order.
std::vector<FrequencyTable> mine_windows(const std::vector<TimeWindow>& windows,
                                         const MiningConfig& config, int threads = 0);

// Load -> partition -> mine per window (in parallel) -> evaluate the pattern
// union on every window -> run the enabled detectors -> write the selected
// reports into output_dir, each from a single writer at the end:
//   windows.csv   window_id,start,end,size,cut_reason (stream positions,
//                 end inclusive)
//   patterns.csv  window_id,code,freq_num,freq_den for the pattern union on
//                 every window, zeros included, codes CSV-quoted
//   changes.jsonl one JSON object per change (sorted keys); rationals as
//                 strings, +inf as "inf", float convenience fields
//   summary.txt   counts per change type, "disabled" for detectors not run
// Output bytes are a pure function of (stream bytes, config).
RunReport run_pipeline(const RunConfig& config, const std::string& stream_path,
                       const ReportSelection& select = {});

} // namespace evomine

#endif
