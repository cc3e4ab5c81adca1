#include "evomine/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <thread>

#include "json.hpp"

#include "evomine/errors.hpp"
#include "evomine/stream_io.hpp"

namespace evomine {

namespace {

using nlohmann::json;

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    t = std::max(1, std::min<int>(t, static_cast<int>(n)));
    if (t == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (int w = 0; w < t; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        }));
    for (auto& worker : workers) worker.get(); // rethrows the first failure
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::ofstream open_report(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path.string() + ": cannot open file for writing", 0);
    return out;
}

json rate_json(const GrowthRate& rate) {
    // nlohmann serializes non-finite doubles as null, which is the only
    // faithful JSON rendering of the +inf convenience value.
    return rate.is_infinite() ? json() : json(rate.to_double());
}

} // namespace

void RunConfig::validate() const {
    partition.validate();
    mining.validate();
    detect.validate();
    if (output_dir.empty()) throw ConfigError("output directory must not be empty");
    if (threads < 0) throw ConfigError("threads must be >= 0");
}

std::vector<FrequencyTable> mine_windows(const std::vector<TimeWindow>& windows,
                                         const MiningConfig& config, int threads) {
    std::vector<std::optional<FrequencyTable>> mined(windows.size());
    parallel_for(windows.size(), threads,
                 [&](std::size_t i) { mined[i] = mine_frequent(windows[i], config); });
    std::vector<FrequencyTable> out;
    out.reserve(mined.size());
    for (auto& table : mined) out.push_back(std::move(*table));
    return out;
}

RunReport run_pipeline(const RunConfig& config, const std::string& stream_path,
                       const ReportSelection& select) {
    config.validate();
    const std::vector<Snapshot> stream = load_stream(stream_path);
    const PartitionResult parts = partition_stream(stream, config.partition);
    const std::vector<TimeWindow>& windows = parts.windows;
    const std::size_t n = windows.size();

    // Mine every window, then score the union of all frequent patterns on
    // every window so detectors see each pattern's full frequency profile.
    const std::vector<FrequencyTable> mined = mine_windows(windows, config.mining,
                                                           config.threads);

    std::map<std::string, Pattern> union_patterns;
    for (const FrequencyTable& table : mined)
        for (const auto& [code, entry] : table.entries())
            union_patterns.emplace(code, entry.pattern);
    std::vector<Pattern> vocabulary;
    for (const auto& [code, pattern] : union_patterns) vocabulary.push_back(pattern);

    std::vector<std::optional<FrequencyTable>> evaluated(n);
    parallel_for(n, config.threads, [&](std::size_t i) {
        evaluated[i] = evaluate_patterns(vocabulary, windows[i]);
    });
    std::vector<FrequencyTable> tables;
    tables.reserve(n);
    for (auto& table : evaluated) tables.push_back(std::move(*table));

    std::vector<EmergingChange> emerging;
    if (config.run_emerging)
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (EmergingChange& c : detect_emerging(tables[i], tables[i + 1], config.detect))
                emerging.push_back(std::move(c));
    std::vector<TrendChange> trends;
    if (config.run_trends && n >= 2) trends = detect_trends(tables, config.detect);
    std::vector<PeriodicChange> periodic;
    long long suppressed_stable = 0;
    if (config.run_periodic && n >= 2)
        periodic = detect_periodic(tables, config.detect, &suppressed_stable);

    RunReport report;
    report.window_count = static_cast<int>(n);
    report.pattern_count = vocabulary.size();
    report.emerging = static_cast<long long>(emerging.size());
    report.trends = static_cast<long long>(trends.size());
    report.periodic = static_cast<long long>(periodic.size());
    report.periodic_stable_suppressed = suppressed_stable;

    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);

    if (select.windows_csv) {
        std::ofstream out = open_report(dir / "windows.csv");
        out << "window_id,start,end,size,cut_reason\n";
        for (std::size_t i = 0; i < n; ++i) {
            const TimeWindow& w = windows[i];
            out << w.window_id() << ',' << w.start_index() << ','
                << w.start_index() + w.size() - 1 << ',' << w.size() << ','
                << cut_reason_name(parts.reasons[i]) << '\n';
        }
    }

    if (select.patterns_csv) {
        std::ofstream out = open_report(dir / "patterns.csv");
        out << "window_id,code,freq_num,freq_den\n";
        for (const FrequencyTable& table : tables)
            for (const auto& [code, entry] : table.entries())
                out << table.window_id() << ',' << csv_quote(code) << ',' << entry.support
                    << ',' << entry.window_size << '\n';
    }

    if (select.changes_jsonl) {
        std::ofstream out = open_report(dir / "changes.jsonl");
        for (const EmergingChange& c : emerging) {
            json record{{"type", "emerging"},
                        {"pattern", c.pattern.code()},
                        {"from_window", c.from_window},
                        {"to_window", c.to_window},
                        {"growth_rate", c.rate.str()},
                        {"growth_rate_float", rate_json(c.rate)}};
            out << record.dump() << '\n';
        }
        for (const TrendChange& c : trends) {
            json record{{"type", "trend"},
                        {"pattern", c.pattern.code()},
                        {"windows", c.window_span},
                        {"sign", std::string(1, c.sign)},
                        {"global", c.global()},
                        {"mode", c.mode == TrendMode::Strict ? "strict" : "lambda"}};
            if (c.lambda_value) {
                record["lambda"] = rational_to_string(*c.lambda_value);
                record["lambda_float"] = rational_to_double(*c.lambda_value);
            }
            out << record.dump() << '\n';
        }
        for (const PeriodicChange& c : periodic) {
            json record{{"type", "periodic"},
                        {"pattern", c.pattern.code()},
                        {"period", c.period},
                        {"category", c.category},
                        {"occurrences", c.occurrences},
                        {"repetitions", c.repetitions},
                        {"exact", c.exact}};
            out << record.dump() << '\n';
        }
    }

    if (select.summary_txt) {
        std::ofstream out = open_report(dir / "summary.txt");
        auto line = [&](const char* name, bool enabled, long long count) {
            out << name << ": ";
            if (enabled)
                out << count;
            else
                out << "disabled";
            out << '\n';
        };
        out << "windows: " << report.window_count << '\n';
        out << "patterns: " << report.pattern_count << '\n';
        line("emerging", config.run_emerging, report.emerging);
        line("trends", config.run_trends, report.trends);
        line("periodic", config.run_periodic, report.periodic);
        line("periodic_stable_suppressed", config.run_periodic,
             report.periodic_stable_suppressed);
    }

    return report;
}

} // namespace evomine
