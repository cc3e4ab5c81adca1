#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "evomine/detect.hpp"
#include "evomine/errors.hpp"
#include "evomine/graph.hpp"
#include "evomine/isomorphism.hpp"
#include "evomine/miner.hpp"
#include "evomine/pipeline.hpp"
#include "evomine/rational.hpp"
#include "evomine/stream_io.hpp"
#include "evomine/windowing.hpp"

namespace py = pybind11;
using namespace evomine;

namespace {

// Accept str ("0.3", "3/10"), int, float (shortest-decimal meaning) or
// anything Fraction-like for every exact-rational parameter.
Rational to_rational(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    if (py::isinstance<py::bool_>(obj))
        throw py::type_error("expected a rational-like value, got bool");
    if (py::isinstance<py::int_>(obj)) return Rational(obj.cast<long long>());
    if (py::isinstance<py::float_>(obj)) return rational_from_double(obj.cast<double>());
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return Rational(obj.attr("numerator").cast<long long>(),
                        obj.attr("denominator").cast<long long>());
    throw py::type_error("expected str, int, float or Fraction for an exact rational");
}

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

std::vector<ThetaBin> to_theta_bins(const py::object& bins) {
    std::vector<ThetaBin> out;
    if (bins.is_none()) return out;
    for (py::handle item : bins) {
        auto pair = item.cast<std::pair<py::object, std::string>>();
        bool inf = py::isinstance<py::str>(pair.first) &&
                   pair.first.cast<std::string>() == "inf";
        out.push_back({inf ? Rational(0) : to_rational(pair.first), inf, pair.second});
    }
    return out;
}

DetectConfig make_detect_config(const py::object& beta, const std::string& trend_mode,
                                const py::object& trend_epsilon, int period_max, int jitter,
                                int min_repetitions, const py::object& theta_bins,
                                bool include_stable) {
    DetectConfig config;
    config.beta = to_rational(beta);
    if (trend_mode == "strict")
        config.trend_mode = TrendMode::Strict;
    else if (trend_mode == "lambda")
        config.trend_mode = TrendMode::Lambda;
    else
        throw ConfigError("trend_mode must be \"strict\" or \"lambda\"");
    config.trend_epsilon = to_rational(trend_epsilon);
    config.period_max = period_max;
    config.jitter = jitter;
    config.min_repetitions = min_repetitions;
    config.theta_bins = to_theta_bins(theta_bins);
    config.include_stable_periodic = include_stable;
    config.validate();
    return config;
}

py::dict emerging_dict(const EmergingChange& c) {
    py::dict d;
    d["pattern"] = c.pattern;
    d["pattern_code"] = c.pattern.code();
    d["from_window"] = c.from_window;
    d["to_window"] = c.to_window;
    d["growth_rate"] = c.rate.str();
    d["growth_rate_float"] = c.rate.to_double();
    return d;
}

py::dict trend_dict(const TrendChange& c) {
    py::dict d;
    d["pattern"] = c.pattern;
    d["pattern_code"] = c.pattern.code();
    d["windows"] = c.window_span;
    d["sign"] = std::string(1, c.sign);
    d["global"] = c.global();
    d["mode"] = c.mode == TrendMode::Strict ? "strict" : "lambda";
    d["lambda"] = c.lambda_value ? fraction(*c.lambda_value) : py::object(py::none());
    return d;
}

py::dict periodic_dict(const PeriodicChange& c) {
    py::dict d;
    d["pattern"] = c.pattern;
    d["pattern_code"] = c.pattern.code();
    d["period"] = c.period;
    d["category"] = c.category;
    d["occurrences"] = c.occurrences;
    d["repetitions"] = c.repetitions;
    d["exact"] = c.exact;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "evomine core: window partitioning, frequent subgraph mining and "
              "change detection for evolving networks";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ConfigError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const InternalError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<Snapshot>(m, "Snapshot",
                         "One labeled undirected graph observed at a discrete time index.")
        .def(py::init<long long, std::vector<std::pair<long long, std::string>>,
                      std::vector<std::tuple<long long, long long, std::string>>>(),
             py::arg("time_index"), py::arg("nodes"), py::arg("edges"))
        .def_property_readonly("time_index", &Snapshot::time_index)
        .def_property_readonly("node_count", &Snapshot::node_count)
        .def_property_readonly("edge_count", &Snapshot::edge_count)
        .def("nodes",
             [](const Snapshot& s) {
                 std::vector<std::pair<long long, std::string>> out;
                 for (int i = 0; i < s.node_count(); ++i)
                     out.emplace_back(s.node_id(i), s.node_label(i));
                 return out;
             },
             "(external id, label) pairs in ascending id order")
        .def("edges",
             [](const Snapshot& s) {
                 std::vector<std::tuple<long long, long long, std::string>> out;
                 for (const Snapshot::Edge& e : s.edges())
                     out.emplace_back(s.node_id(e.u), s.node_id(e.v), s.label_text(e.label));
                 return out;
             },
             "(id a, id b, label) triples, a < b, sorted")
        .def("__repr__", [](const Snapshot& s) {
            return "Snapshot(t=" + std::to_string(s.time_index()) +
                   ", nodes=" + std::to_string(s.node_count()) +
                   ", edges=" + std::to_string(s.edge_count()) + ")";
        });

    py::class_<Pattern>(m, "Pattern",
                        "A connected labeled graph; the unit of change description. "
                        "Equal canonical codes mean isomorphic patterns.")
        .def(py::init<std::vector<std::pair<long long, std::string>>,
                      std::vector<std::tuple<long long, long long, std::string>>>(),
             py::arg("nodes"), py::arg("edges"))
        .def_property_readonly("code", [](const Pattern& p) { return p.code(); })
        .def_property_readonly("node_count", &Pattern::node_count)
        .def_property_readonly("edge_count", &Pattern::edge_count)
        .def("node_labels", [](const Pattern& p) { return p.node_labels(); })
        .def("edges",
             [](const Pattern& p) {
                 std::vector<std::tuple<int, int, std::string>> out;
                 for (const Pattern::Edge& e : p.edges()) out.emplace_back(e.u, e.v, e.label);
                 return out;
             })
        .def("__eq__", [](const Pattern& a, const Pattern& b) { return a == b; })
        .def("__hash__", [](const Pattern& p) { return py::hash(py::str(p.code())); })
        .def("__repr__", [](const Pattern& p) { return "Pattern(" + p.code() + ")"; });

    py::class_<TimeWindow>(m, "TimeWindow", "A contiguous run of snapshots.")
        .def(py::init<int, int, std::vector<Snapshot>>(), py::arg("window_id"),
             py::arg("start_index"), py::arg("snapshots"))
        .def_property_readonly("window_id", &TimeWindow::window_id)
        .def_property_readonly("start_index", &TimeWindow::start_index)
        .def_property_readonly("size", &TimeWindow::size)
        .def_property_readonly("snapshots", &TimeWindow::snapshots)
        .def("__len__", &TimeWindow::size)
        .def("__repr__", [](const TimeWindow& w) {
            return "TimeWindow(id=" + std::to_string(w.window_id()) +
                   ", size=" + std::to_string(w.size()) + ")";
        });

    py::class_<FrequencyTable>(m, "FrequencyTable",
                               "Exact per-window relative frequencies by canonical code.")
        .def_property_readonly("window_id", &FrequencyTable::window_id)
        .def_property_readonly("window_size", &FrequencyTable::window_size)
        .def("__len__", [](const FrequencyTable& t) { return t.size(); })
        .def("__contains__",
             [](const FrequencyTable& t, const std::string& code) { return t.contains(code); })
        .def("codes",
             [](const FrequencyTable& t) {
                 std::vector<std::string> out;
                 for (const auto& [code, entry] : t.entries()) out.push_back(code);
                 return out;
             })
        .def("pattern",
             [](const FrequencyTable& t, const std::string& code) {
                 auto it = t.entries().find(code);
                 if (it == t.entries().end()) throw py::key_error(code);
                 return it->second.pattern;
             },
             py::arg("code"))
        .def("freq_of",
             [](const FrequencyTable& t, const std::string& code) {
                 return fraction(t.freq_of(code));
             },
             py::arg("code"), "exact relative frequency as a Fraction; 0 when absent")
        .def("items",
             [](const FrequencyTable& t) {
                 py::list out;
                 for (const auto& [code, entry] : t.entries())
                     out.append(py::make_tuple(code, entry.pattern, fraction(entry.freq())));
                 return out;
             })
        .def("__repr__", [](const FrequencyTable& t) {
            return "FrequencyTable(window=" + std::to_string(t.window_id()) +
                   ", patterns=" + std::to_string(t.size()) + ")";
        });

    m.def("canonical_code", [](const Pattern& p) { return p.code(); }, py::arg("pattern"),
          "Canonical minimum-DFS-code string of a pattern's isomorphism class.");

    m.def("is_subgraph", &is_subgraph, py::arg("pattern"), py::arg("snapshot"),
          "True when a label-preserving injective embedding of pattern exists in snapshot.");

    m.def(
        "partition",
        [](const std::vector<Snapshot>& stream, bool adaptive, int window_size, double tau,
           int min_window, int max_window) {
            PartitionConfig config;
            config.mode = adaptive ? PartitionMode::Adaptive : PartitionMode::Fixed;
            config.fixed_size = window_size;
            config.divergence_threshold = tau;
            config.min_window = min_window;
            config.max_window = max_window;
            PartitionResult result = partition_stream(stream, config);
            py::list out;
            for (std::size_t i = 0; i < result.windows.size(); ++i)
                out.append(py::make_tuple(result.windows[i],
                                          std::string(cut_reason_name(result.reasons[i]))));
            return out;
        },
        py::arg("stream"), py::kw_only(), py::arg("adaptive") = false,
        py::arg("window_size") = 10, py::arg("tau") = 0.1, py::arg("min_window") = 2,
        py::arg("max_window") = 1000,
        "Split a snapshot stream into time windows; returns (TimeWindow, cut_reason) pairs.");

    m.def("snapshot_distribution",
          [](const Snapshot& s) {
              py::dict out;
              for (const auto& [key, mass] : snapshot_distribution(s))
                  out[py::make_tuple(std::string(1, key.first), key.second)] = mass;
              return out;
          },
          py::arg("snapshot"),
          "Label distribution with keys (kind, label), kind \"n\" or \"e\".");

    m.def("js_divergence",
          [](const py::dict& a, const py::dict& b) {
              auto convert = [](const py::dict& d) {
                  LabelDistribution dist;
                  for (auto item : d) {
                      auto key = item.first.cast<std::pair<std::string, std::string>>();
                      if (key.first != "n" && key.first != "e")
                          throw py::value_error("distribution kind must be \"n\" or \"e\"");
                      dist[{key.first[0], key.second}] = item.second.cast<double>();
                  }
                  return dist;
              };
              return js_divergence(convert(a), convert(b));
          },
          py::arg("a"), py::arg("b"),
          "Jensen-Shannon divergence (log base 2) of two label distributions.");

    m.def("frequency",
          [](const Pattern& p, const TimeWindow& w) { return fraction(frequency(p, w)); },
          py::arg("pattern"), py::arg("window"),
          "Exact fraction of the window's snapshots containing the pattern.");

    m.def(
        "mine_frequent",
        [](const TimeWindow& window, const py::object& alpha, int max_edges) {
            MiningConfig config;
            config.alpha = to_rational(alpha);
            config.max_edges = max_edges;
            return mine_frequent(window, config);
        },
        py::arg("window"), py::kw_only(), py::arg("alpha") = py::str("1/2"),
        py::arg("max_edges") = 3,
        "All connected patterns with frequency strictly above alpha.");

    m.def("evaluate_patterns", &evaluate_patterns, py::arg("patterns"), py::arg("window"),
          "Exact frequencies of the given patterns on the window, zeros included.");

    m.def(
        "growth_rate",
        [](const Pattern& p, const TimeWindow& numerator, const TimeWindow& denominator) {
            return growth_rate(p, numerator, denominator).str();
        },
        py::arg("pattern"), py::arg("numerator_window"), py::arg("denominator_window"),
        "freq ratio as an exact string: \"9\", \"9/2\", \"inf\" or \"undefined\".");

    m.def(
        "theta",
        [](const py::object& rate, const py::object& beta, const py::object& theta_bins) {
            DetectConfig config;
            config.beta = to_rational(beta);
            config.theta_bins = to_theta_bins(theta_bins);
            GrowthRate gr = py::isinstance<py::str>(rate) &&
                                    rate.cast<std::string>() == "inf"
                                ? GrowthRate::infinite()
                                : GrowthRate::finite(to_rational(rate));
            return theta(gr, config);
        },
        py::arg("rate"), py::kw_only(), py::arg("beta") = py::str("2"),
        py::arg("theta_bins") = py::none(),
        "Category of a growth rate (pass \"inf\" for an infinite rate).");

    m.def(
        "detect_emerging",
        [](const FrequencyTable& earlier, const FrequencyTable& later, const py::object& beta) {
            DetectConfig config;
            config.beta = to_rational(beta);
            py::list out;
            for (const EmergingChange& c : detect_emerging(earlier, later, config))
                out.append(emerging_dict(c));
            return out;
        },
        py::arg("earlier"), py::arg("later"), py::kw_only(), py::arg("beta") = py::str("2"),
        "Patterns whose growth rate across the window boundary strictly exceeds beta.");

    m.def(
        "detect_trends",
        [](const std::vector<FrequencyTable>& tables, const std::string& trend_mode,
           const py::object& trend_epsilon) {
            DetectConfig config = make_detect_config(py::str("2"), trend_mode, trend_epsilon,
                                                     8, 0, 3, py::none(), false);
            py::list out;
            for (const TrendChange& c : detect_trends(tables, config)) out.append(trend_dict(c));
            return out;
        },
        py::arg("tables"), py::kw_only(), py::arg("trend_mode") = "strict",
        py::arg("trend_epsilon") = py::str("0"),
        "Monotone frequency runs (strict) or mean-relative moves (lambda).");

    m.def(
        "detect_periodic",
        [](const std::vector<FrequencyTable>& tables, const py::object& beta, int period_max,
           int jitter, int min_repetitions, const py::object& theta_bins, bool include_stable) {
            DetectConfig config =
                make_detect_config(beta, "strict", py::str("0"), period_max, jitter,
                                   min_repetitions, theta_bins, include_stable);
            py::list out;
            for (const PeriodicChange& c : detect_periodic(tables, config))
                out.append(periodic_dict(c));
            return out;
        },
        py::arg("tables"), py::kw_only(), py::arg("beta") = py::str("2"),
        py::arg("period_max") = 8, py::arg("jitter") = 0, py::arg("min_repetitions") = 3,
        py::arg("theta_bins") = py::none(), py::arg("include_stable") = false,
        "Recurring growth-rate categories with period up to period_max.");

    m.def(
        "find_periodic_chains",
        [](const std::vector<std::optional<std::string>>& categories, int period_max,
           int jitter, int min_repetitions) {
            py::list out;
            for (const PeriodicChain& c :
                 find_periodic_chains(categories, period_max, jitter, min_repetitions)) {
                py::dict d;
                d["period"] = c.period;
                d["category"] = c.category;
                d["occurrences"] = c.occurrences;
                out.append(d);
            }
            return out;
        },
        py::arg("categories"), py::arg("period_max"), py::arg("jitter"),
        py::arg("min_repetitions"),
        "Maximal periodic chains of a category sequence (None = undefined position).");

    m.def("load_stream", py::overload_cast<const std::string&>(&load_stream), py::arg("path"),
          "Parse a stream file into snapshots (see README for the format).");

    m.def("write_stream",
          py::overload_cast<const std::vector<Snapshot>&, const std::string&>(&write_stream),
          py::arg("snapshots"), py::arg("path"), "Write snapshots in normalized stream form.");

    m.def(
        "run_pipeline",
        [](const std::string& stream_path, const std::string& out_dir, bool adaptive,
           int window_size, double tau, int min_window, int max_window,
           const py::object& alpha, int max_edges, const py::object& beta,
           const std::string& trend_mode, const py::object& trend_epsilon, int period_max,
           int jitter, int min_repetitions, const py::object& theta_bins, bool include_stable,
           const std::vector<std::string>& detectors, int threads) {
            RunConfig config;
            config.partition.mode =
                adaptive ? PartitionMode::Adaptive : PartitionMode::Fixed;
            config.partition.fixed_size = window_size;
            config.partition.divergence_threshold = tau;
            config.partition.min_window = min_window;
            config.partition.max_window = max_window;
            config.mining.alpha = to_rational(alpha);
            config.mining.max_edges = max_edges;
            config.detect = make_detect_config(beta, trend_mode, trend_epsilon, period_max,
                                               jitter, min_repetitions, theta_bins,
                                               include_stable);
            config.run_emerging = config.run_trends = config.run_periodic = false;
            for (const std::string& name : detectors) {
                if (name == "emerging")
                    config.run_emerging = true;
                else if (name == "trends")
                    config.run_trends = true;
                else if (name == "periodic")
                    config.run_periodic = true;
                else
                    throw ConfigError("unknown detector \"" + name + "\"");
            }
            config.output_dir = out_dir;
            config.threads = threads;
            RunReport report = run_pipeline(config, stream_path);
            py::dict out;
            out["windows"] = report.window_count;
            out["patterns"] = report.pattern_count;
            out["emerging"] = report.emerging;
            out["trends"] = report.trends;
            out["periodic"] = report.periodic;
            out["periodic_stable_suppressed"] = report.periodic_stable_suppressed;
            return out;
        },
        py::arg("stream_path"), py::arg("out_dir"), py::kw_only(),
        py::arg("adaptive") = false, py::arg("window_size") = 10, py::arg("tau") = 0.1,
        py::arg("min_window") = 2, py::arg("max_window") = 1000,
        py::arg("alpha") = py::str("1/2"), py::arg("max_edges") = 3,
        py::arg("beta") = py::str("2"), py::arg("trend_mode") = "strict",
        py::arg("trend_epsilon") = py::str("0"), py::arg("period_max") = 8,
        py::arg("jitter") = 0, py::arg("min_repetitions") = 3,
        py::arg("theta_bins") = py::none(), py::arg("include_stable") = false,
        py::arg("detectors") = std::vector<std::string>{"emerging", "trends", "periodic"},
        py::arg("threads") = 0,
        "Full batch pipeline: partition, mine, detect, write report files into out_dir.");
}
