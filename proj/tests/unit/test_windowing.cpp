#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "evomine/errors.hpp"
#include "evomine/windowing.hpp"
#include "support/fixtures.hpp"

using evomine::ConfigError;
using evomine::CutReason;
using evomine::LabelDistribution;
using evomine::PartitionConfig;
using evomine::PartitionMode;
using evomine::Snapshot;
using evomine::TimeWindow;

namespace {

// one labeled node per snapshot, enough to steer label distributions by hand
std::vector<Snapshot> node_stream(const std::vector<std::string>& labels) {
    std::vector<Snapshot> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out.emplace_back(static_cast<long long>(i),
                         std::vector<std::pair<long long, std::string>>{{1, labels[i]}},
                         std::vector<std::tuple<long long, long long, std::string>>{});
    return out;
}

std::vector<int> sizes(const std::vector<TimeWindow>& ws) {
    std::vector<int> out;
    for (const TimeWindow& w : ws) out.push_back(w.size());
    return out;
}

} // namespace

TEST_CASE("TimeWindow validates its snapshots") {
    std::vector<Snapshot> two = node_stream({"A", "A"});
    TimeWindow w(3, 7, two);
    CHECK(w.window_id() == 3);
    CHECK(w.start_index() == 7);
    CHECK(w.size() == 2);

    CHECK_THROWS_AS(TimeWindow(0, 0, {}), std::invalid_argument);
    std::vector<Snapshot> bad = {two[1], two[0]}; // times 1, 0
    CHECK_THROWS_AS(TimeWindow(0, 0, bad), std::invalid_argument);
    std::vector<Snapshot> dup = {two[0], two[0]};
    CHECK_THROWS_AS(TimeWindow(0, 0, dup), std::invalid_argument);
}

TEST_CASE("PartitionConfig validation") {
    PartitionConfig c;
    CHECK_NOTHROW(c.validate());
    PartitionConfig bad = c;
    bad.fixed_size = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = c;
    bad.min_window = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = c;
    bad.min_window = 10;
    bad.max_window = 5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = c;
    bad.divergence_threshold = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.divergence_threshold = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.divergence_threshold = 1.0;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("snapshot_distribution splits mass between node and edge labels") {
    Snapshot s(0, {{1, "A"}, {2, "B"}}, {{1, 2, "x"}});
    LabelDistribution d = evomine::snapshot_distribution(s);
    CHECK(d.at({'n', "A"}) == doctest::Approx(0.25));
    CHECK(d.at({'n', "B"}) == doctest::Approx(0.25));
    CHECK(d.at({'e', "x"}) == doctest::Approx(0.5));

    Snapshot nodes_only(0, {{1, "A"}, {2, "A"}}, {});
    LabelDistribution dn = evomine::snapshot_distribution(nodes_only);
    CHECK(dn.size() == 1);
    CHECK(dn.at({'n', "A"}) == doctest::Approx(1.0));

    Snapshot empty(0, {}, {});
    CHECK(evomine::snapshot_distribution(empty).empty());
}

TEST_CASE("snapshot_distribution sums to one on random snapshots") {
    std::mt19937 engine(9);
    for (int i = 0; i < 20; ++i) {
        Snapshot s = fixtures::random_snapshot(engine, 0, 8, 12, {"A", "B", "C"}, {"x", "y"});
        LabelDistribution d = evomine::snapshot_distribution(s);
        if (s.node_count() == 0) {
            CHECK(d.empty());
            continue;
        }
        double sum = 0;
        for (const auto& [key, mass] : d) sum += mass;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("js_divergence endpoints and a hand value") {
    LabelDistribution a = {{{'n', "A"}, 1.0}};
    LabelDistribution b = {{{'n', "B"}, 1.0}};
    LabelDistribution half = {{{'n', "A"}, 0.5}, {{'n', "B"}, 0.5}};
    LabelDistribution empty;

    CHECK(evomine::js_divergence(a, a) == doctest::Approx(0.0));
    CHECK(evomine::js_divergence(a, b) == doctest::Approx(1.0));
    CHECK(evomine::js_divergence(empty, empty) == doctest::Approx(0.0));
    CHECK(evomine::js_divergence(empty, a) == doctest::Approx(1.0));
    CHECK(evomine::js_divergence(a, empty) == doctest::Approx(1.0));

    // JSD({A:1}, {A:.5,B:.5}) = (log2(4/3) + .5*log2(2/3) + .5) / 2
    double expected = 0.31127812445913283;
    CHECK(evomine::js_divergence(a, half) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(evomine::js_divergence(half, a) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fixed_partition sizes, ids and reasons") {
    std::vector<Snapshot> stream = fixtures::constant_stream(7);
    PartitionConfig cfg;
    cfg.fixed_size = 3;
    std::vector<TimeWindow> ws = evomine::fixed_partition(stream, cfg);
    CHECK(sizes(ws) == std::vector<int>{3, 3, 1});
    CHECK(ws[0].window_id() == 0);
    CHECK(ws[1].window_id() == 1);
    CHECK(ws[2].window_id() == 2);
    CHECK(ws[0].start_index() == 0);
    CHECK(ws[1].start_index() == 3);
    CHECK(ws[2].start_index() == 6);

    evomine::PartitionResult res = evomine::partition_stream(stream, cfg);
    REQUIRE(res.reasons.size() == 3);
    CHECK(res.reasons[0] == CutReason::FixedSize);
    CHECK(res.reasons[1] == CutReason::FixedSize);
    CHECK(res.reasons[2] == CutReason::EndOfStream);

    // exact division: every window closes as fixed_size
    std::vector<Snapshot> six = fixtures::constant_stream(6);
    evomine::PartitionResult even = evomine::partition_stream(six, cfg);
    CHECK(sizes(even.windows) == std::vector<int>{3, 3});
    CHECK(even.reasons == std::vector<CutReason>{CutReason::FixedSize, CutReason::FixedSize});

    CHECK_THROWS_AS(evomine::fixed_partition({}, cfg), std::invalid_argument);
}

TEST_CASE("fixed_partition concatenation reproduces the stream") {
    std::vector<Snapshot> stream = fixtures::constant_stream(23);
    PartitionConfig cfg;
    cfg.fixed_size = 5;
    std::vector<TimeWindow> ws = evomine::fixed_partition(stream, cfg);
    std::size_t pos = 0;
    for (const TimeWindow& w : ws) {
        CHECK(w.start_index() == static_cast<int>(pos));
        for (const Snapshot& s : w.snapshots()) {
            REQUIRE(pos < stream.size());
            CHECK(s.time_index() == stream[pos].time_index());
            ++pos;
        }
    }
    CHECK(pos == stream.size());
}

TEST_CASE("adaptive_partition cuts on divergence after min_window") {
    // alternate disjoint vocabularies: every admissible boundary diverges
    std::vector<Snapshot> stream =
        node_stream({"A", "B", "A", "B", "A", "B", "A"});
    PartitionConfig cfg;
    cfg.mode = PartitionMode::Adaptive;
    cfg.divergence_threshold = 0.1;
    cfg.min_window = 2;

    evomine::PartitionResult res = evomine::partition_stream(stream, cfg);
    CHECK(sizes(res.windows) == std::vector<int>{2, 2, 2, 1});
    REQUIRE(res.reasons.size() == 4);
    CHECK(res.reasons[0] == CutReason::Divergence);
    CHECK(res.reasons[1] == CutReason::Divergence);
    CHECK(res.reasons[2] == CutReason::Divergence);
    CHECK(res.reasons[3] == CutReason::EndOfStream);

    cfg.min_window = 1;
    res = evomine::partition_stream(stream, cfg);
    CHECK(sizes(res.windows) == std::vector<int>{1, 1, 1, 1, 1, 1, 1});

    cfg.min_window = 4; // boundaries below min_window are never cut
    res = evomine::partition_stream(stream, cfg);
    CHECK(res.windows[0].size() >= 4);
}

TEST_CASE("adaptive_partition forces a cut at max_window") {
    std::vector<Snapshot> stream = fixtures::constant_stream(10);
    PartitionConfig cfg;
    cfg.mode = PartitionMode::Adaptive;
    cfg.max_window = 4;
    evomine::PartitionResult res = evomine::partition_stream(stream, cfg);
    CHECK(sizes(res.windows) == std::vector<int>{4, 4, 2});
    CHECK(res.reasons ==
          std::vector<CutReason>{CutReason::MaxWindow, CutReason::MaxWindow,
                                 CutReason::EndOfStream});
}

TEST_CASE("adaptive_partition keeps a drift-free stream in one window") {
    std::vector<Snapshot> stream = fixtures::constant_stream(30);
    PartitionConfig cfg;
    cfg.mode = PartitionMode::Adaptive;
    evomine::PartitionResult res = evomine::partition_stream(stream, cfg);
    CHECK(sizes(res.windows) == std::vector<int>{30});
    CHECK(res.reasons == std::vector<CutReason>{CutReason::EndOfStream});
}

TEST_CASE("adaptive_partition finds a planted label shift") {
    std::vector<Snapshot> stream = fixtures::label_shift_stream(1);
    PartitionConfig cfg;
    cfg.mode = PartitionMode::Adaptive;
    cfg.divergence_threshold = 0.1;
    evomine::PartitionResult res = evomine::partition_stream(stream, cfg);
    REQUIRE(res.windows.size() >= 2);
    CHECK(std::abs(res.windows[1].start_index() - 50) <= 2);
}

TEST_CASE("cut_reason_name strings") {
    CHECK(std::string(evomine::cut_reason_name(CutReason::FixedSize)) == "fixed_size");
    CHECK(std::string(evomine::cut_reason_name(CutReason::Divergence)) == "divergence");
    CHECK(std::string(evomine::cut_reason_name(CutReason::MaxWindow)) == "max_window");
    CHECK(std::string(evomine::cut_reason_name(CutReason::EndOfStream)) == "end_of_stream");
}
