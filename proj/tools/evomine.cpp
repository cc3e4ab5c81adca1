// evomine — batch analysis of evolving networks: partition a snapshot stream
// into time windows, mine frequent connected subgraph patterns per window,
// and detect emerging / trend / periodic changes in their frequencies.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "evomine/errors.hpp"
#include "evomine/pipeline.hpp"
#include "evomine/stream_io.hpp"

namespace {

struct Options {
    std::string input;
    std::string out = "evomine-out";
    // partitioning
    int window_size = 10;
    bool adaptive = false;
    double tau = 0.1;
    int min_window = 2;
    int max_window = 1000;
    // mining
    std::string alpha = "1/2";
    int max_edges = 3;
    // detection
    std::string beta = "2";
    std::string trend_mode = "strict";
    std::string trend_epsilon = "0";
    int period_max = 8;
    int jitter = 0;
    int min_repetitions = 3;
    std::string theta_bins;
    bool include_stable = false;
    std::string detectors = "emerging,trends,periodic";
    std::string config_file; // consumed before parsing; registered for --help only
};

// Config-file values are injected as option tokens ahead of the explicit
// command line, so "last occurrence wins" makes flags override the file.
CLI::Option* last_wins(CLI::Option* opt) {
    return opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("stream", o.input, "input stream file (TSV, see README)")
        ->required()
        ->check(CLI::ExistingFile);
    last_wins(cmd->add_option("--out", o.out, "output directory for report files")
                  ->capture_default_str());
    cmd->add_option("--config", o.config_file,
                    "configuration file with key=value lines (flag names without "
                    "the leading --); command-line flags take precedence");
}

void add_partition(CLI::App* cmd, Options& o) {
    last_wins(cmd->add_option("--window-size", o.window_size,
                              "snapshots per window (fixed mode)")
                  ->capture_default_str());
    last_wins(cmd->add_flag("--adaptive", o.adaptive,
                            "cut windows on label-distribution divergence instead of "
                            "a fixed size"));
    last_wins(cmd->add_option("--tau", o.tau, "divergence threshold in (0,1] (adaptive mode)")
                  ->capture_default_str());
    last_wins(
        cmd->add_option("--min-window", o.min_window, "minimum window length (adaptive mode)")
            ->capture_default_str());
    last_wins(
        cmd->add_option("--max-window", o.max_window, "maximum window length (adaptive mode)")
            ->capture_default_str());
}

void add_mining(CLI::App* cmd, Options& o) {
    last_wins(cmd->add_option("--alpha", o.alpha,
                              "minimum relative frequency, exceeded strictly; exact rational "
                              "(\"0.3\", \"3/10\")")
                  ->capture_default_str());
    last_wins(cmd->add_option("--max-edges", o.max_edges, "largest pattern size in edges")
                  ->capture_default_str());
}

void add_detection(CLI::App* cmd, Options& o) {
    last_wins(cmd->add_option("--beta", o.beta, "growth-rate threshold (> 1), exact rational")
                  ->capture_default_str());
    last_wins(cmd->add_option("--trend-mode", o.trend_mode, "trend test: strict or lambda")
                  ->check(CLI::IsMember({"strict", "lambda"}))
                  ->capture_default_str());
    last_wins(cmd->add_option("--trend-epsilon", o.trend_epsilon,
                              "dead band around the lambda mean, exact rational")
                  ->capture_default_str());
    last_wins(cmd->add_option("--period-max", o.period_max, "largest period searched")
                  ->capture_default_str());
    last_wins(cmd->add_option("--jitter", o.jitter,
                              "occurrence tolerance J for periodic chains")
                  ->capture_default_str());
    last_wins(cmd->add_option("--min-repetitions", o.min_repetitions,
                              "occurrences needed before a period is reported")
                  ->capture_default_str());
    last_wins(cmd->add_option("--theta-bins", o.theta_bins,
                              "growth-rate categories as upper:name,...,inf:name "
                              "(default 1/beta:shrinking,beta:stable,inf:growing)"));
    last_wins(cmd->add_flag("--include-stable-periodic", o.include_stable,
                            "report periodic chains of the stable category too"));
    last_wins(cmd->add_option("--detectors", o.detectors,
                              "comma-separated subset of emerging,trends,periodic")
                  ->capture_default_str());
}

std::string trim_copy(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    std::size_t last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

// Long option names a config file may set for this subcommand.
std::set<std::string> config_keys(const CLI::App* cmd) {
    std::set<std::string> keys;
    for (const CLI::Option* opt : cmd->get_options())
        for (const std::string& name : opt->get_lnames())
            if (name != "config" && name != "help") keys.insert(name);
    return keys;
}

std::vector<std::string> config_tokens(const std::string& path, const CLI::App* cmd) {
    std::ifstream in(path);
    if (!in) throw evomine::ConfigError(path + ": cannot open config file");
    std::set<std::string> keys = config_keys(cmd);
    std::vector<std::string> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string entry = trim_copy(line);
        if (entry.empty() || entry[0] == '#') continue;
        std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw evomine::ConfigError(path + ":" + std::to_string(line_no) +
                                       ": expected key=value");
        std::string key = trim_copy(entry.substr(0, eq));
        std::string value = trim_copy(entry.substr(eq + 1));
        if (keys.find(key) == keys.end())
            throw evomine::ConfigError(path + ":" + std::to_string(line_no) +
                                       ": unknown key \"" + key + "\"");
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Replace "--config FILE" with the file's key=value pairs as option tokens,
// inserted directly after the subcommand name so explicit flags stay behind
// them and win under the take-last policy.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::map<std::string, const CLI::App*>& subs) {
    std::size_t sub_pos = args.size();
    const CLI::App* sub = nullptr;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::map<std::string, const CLI::App*>::const_iterator it = subs.find(args[i]);
        if (it != subs.end()) {
            sub_pos = i;
            sub = it->second;
            break;
        }
    }
    if (sub == nullptr) return args; // --help / bad usage: let the parser report it

    std::string config_file;
    bool have_config = false;
    std::vector<std::string> tail;
    for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size())
                throw evomine::ConfigError("--config requires a file argument");
            config_file = args[++i];
            have_config = true;
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_file = args[i].substr(std::string("--config=").size());
            have_config = true;
        } else {
            tail.push_back(args[i]);
        }
    }
    std::vector<std::string> expanded(args.begin(), args.begin() + sub_pos + 1);
    if (have_config) {
        std::vector<std::string> tokens = config_tokens(config_file, sub);
        expanded.insert(expanded.end(), tokens.begin(), tokens.end());
    }
    expanded.insert(expanded.end(), tail.begin(), tail.end());
    return expanded;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

std::vector<evomine::ThetaBin> parse_theta_bins(const std::string& text) {
    std::vector<evomine::ThetaBin> bins;
    if (text.empty()) return bins;
    for (const std::string& part : split_commas(text)) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw evomine::ConfigError("theta bin \"" + part +
                                       "\" is not of the form upper:category");
        std::string upper = part.substr(0, colon);
        std::string category = part.substr(colon + 1);
        if (upper == "inf")
            bins.push_back({evomine::Rational(0), true, category});
        else
            bins.push_back({evomine::parse_rational(upper), false, category});
    }
    return bins;
}

int env_threads() {
    const char* env = std::getenv("EVOMINE_THREADS");
    if (!env || !*env) return 0;
    try {
        int t = std::stoi(env);
        if (t < 0) throw std::invalid_argument("negative");
        return t;
    } catch (const std::exception&) {
        throw evomine::ConfigError("EVOMINE_THREADS must be a nonnegative integer");
    }
}

evomine::RunConfig make_config(const Options& o) {
    evomine::RunConfig config;
    config.partition.mode =
        o.adaptive ? evomine::PartitionMode::Adaptive : evomine::PartitionMode::Fixed;
    config.partition.fixed_size = o.window_size;
    config.partition.divergence_threshold = o.tau;
    config.partition.min_window = o.min_window;
    config.partition.max_window = o.max_window;
    config.mining.alpha = evomine::parse_rational(o.alpha);
    config.mining.max_edges = o.max_edges;
    config.detect.beta = evomine::parse_rational(o.beta);
    config.detect.trend_mode = o.trend_mode == "lambda" ? evomine::TrendMode::Lambda
                                                        : evomine::TrendMode::Strict;
    config.detect.trend_epsilon = evomine::parse_rational(o.trend_epsilon);
    config.detect.period_max = o.period_max;
    config.detect.jitter = o.jitter;
    config.detect.min_repetitions = o.min_repetitions;
    config.detect.theta_bins = parse_theta_bins(o.theta_bins);
    config.detect.include_stable_periodic = o.include_stable;
    config.run_emerging = config.run_trends = config.run_periodic = false;
    for (const std::string& name : split_commas(o.detectors)) {
        if (name == "emerging")
            config.run_emerging = true;
        else if (name == "trends")
            config.run_trends = true;
        else if (name == "periodic")
            config.run_periodic = true;
        else
            throw evomine::ConfigError("unknown detector \"" + name +
                                       "\" (expected emerging, trends or periodic)");
    }
    config.output_dir = o.out;
    config.threads = env_threads();
    config.validate();
    return config;
}

void write_windows_csv(const evomine::PartitionResult& parts, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "windows.csv", std::ios::binary);
    if (!out) throw evomine::ParseError(out_dir + "/windows.csv: cannot open for writing", 0);
    out << "window_id,start,end,size,cut_reason\n";
    for (std::size_t i = 0; i < parts.windows.size(); ++i) {
        const evomine::TimeWindow& w = parts.windows[i];
        out << w.window_id() << ',' << w.start_index() << ','
            << w.start_index() + w.size() - 1 << ',' << w.size() << ','
            << evomine::cut_reason_name(parts.reasons[i]) << '\n';
    }
}

void csv_code(std::ostream& out, const std::string& code) {
    out << '"';
    for (char c : code) {
        out << c;
        if (c == '"') out << '"';
    }
    out << '"';
}

int run_partition(const Options& o) {
    evomine::PartitionConfig config = make_config(o).partition;
    evomine::PartitionResult parts =
        evomine::partition_stream(evomine::load_stream(o.input), config);
    write_windows_csv(parts, o.out);
    return 0;
}

int run_mine(const Options& o) {
    evomine::RunConfig config = make_config(o);
    evomine::PartitionResult parts =
        evomine::partition_stream(evomine::load_stream(o.input), config.partition);
    std::vector<evomine::FrequencyTable> tables =
        evomine::mine_windows(parts.windows, config.mining, config.threads);
    write_windows_csv(parts, o.out);
    std::ofstream out(std::filesystem::path(o.out) / "patterns.csv", std::ios::binary);
    if (!out) throw evomine::ParseError(o.out + "/patterns.csv: cannot open for writing", 0);
    out << "window_id,code,freq_num,freq_den\n";
    for (const evomine::FrequencyTable& table : tables)
        for (const auto& [code, entry] : table.entries()) {
            out << table.window_id() << ',';
            csv_code(out, code);
            out << ',' << entry.support << ',' << entry.window_size << '\n';
        }
    return 0;
}

int run_full(const Options& o, bool detect_only) {
    evomine::ReportSelection select;
    if (detect_only) {
        select.windows_csv = false;
        select.patterns_csv = false;
    }
    evomine::run_pipeline(make_config(o), o.input, select);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evolving-network change mining: window partitioning, frequent "
                 "subgraph mining, and change detection"};
    app.require_subcommand(1);
    Options o;

    CLI::App* partition =
        app.add_subcommand("partition", "split a stream into time windows (windows.csv)");
    add_common(partition, o);
    add_partition(partition, o);

    CLI::App* mine = app.add_subcommand(
        "mine", "partition, then mine frequent patterns per window (windows.csv, patterns.csv)");
    add_common(mine, o);
    add_partition(mine, o);
    add_mining(mine, o);

    CLI::App* detect = app.add_subcommand(
        "detect", "full analysis, emitting change reports only (changes.jsonl, summary.txt)");
    add_common(detect, o);
    add_partition(detect, o);
    add_mining(detect, o);
    add_detection(detect, o);

    CLI::App* run = app.add_subcommand(
        "run", "full analysis with all report files (windows.csv, patterns.csv, "
               "changes.jsonl, summary.txt)");
    add_common(run, o);
    add_partition(run, o);
    add_mining(run, o);
    add_detection(run, o);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(std::move(args), {{"partition", partition},
                                               {"mine", mine},
                                               {"detect", detect},
                                               {"run", run}});
    } catch (const evomine::ConfigError& e) {
        std::cerr << "evomine: config: " << e.what() << '\n';
        return 1;
    }
    std::reverse(args.begin(), args.end()); // parse(vector) consumes back to front
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors map to exit 1
    }

    try {
        if (app.got_subcommand(partition)) return run_partition(o);
        if (app.got_subcommand(mine)) return run_mine(o);
        if (app.got_subcommand(detect)) return run_full(o, true);
        return run_full(o, false);
    } catch (const evomine::ConfigError& e) {
        std::cerr << "evomine: config: " << e.what() << '\n';
        return 1;
    } catch (const evomine::ParseError& e) {
        std::cerr << "evomine: parse: " << e.what() << '\n';
        return 2;
    } catch (const evomine::InternalError& e) {
        std::cerr << "evomine: internal: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "evomine: config: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "evomine: internal: " << e.what() << '\n';
        return 3;
    }
}
