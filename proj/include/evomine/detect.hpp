#ifndef EVOMINE_DETECT_HPP
#define EVOMINE_DETECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "evomine/graph.hpp"
#include "evomine/miner.hpp"
#include "evomine/rational.hpp"

namespace evomine {

// One bin of the growth-rate categorization map: covers rates up to and
// including `upper` (the bin with infinite = true also absorbs +inf).
struct ThetaBin {
    Rational upper;
    bool infinite = false;
    std::string category;
};

enum class TrendMode { Strict, Lambda };

struct DetectConfig {
    Rational beta = Rational(2); // growth-rate threshold, > 1
    TrendMode trend_mode = TrendMode::Strict;
    Rational trend_epsilon = Rational(0); // dead band around lambda
    int period_max = 8;
    int jitter = 0;          // occurrence tolerance J
    int min_repetitions = 3; // two occurrences fit any period; three evidence one
    // Empty means the default three bins anchored at 1/beta and beta, so that
    // "growing" coincides with the emerging threshold.
    std::vector<ThetaBin> theta_bins;
    // A constant stream is trivially 1-periodic at the category of rate 1;
    // such findings are suppressed unless this is set.
    bool include_stable_periodic = false;

    void validate() const;
    std::vector<ThetaBin> effective_theta_bins() const;
};

struct EmergingChange {
    Pattern pattern;
    int from_window; // earlier window id
    int to_window;   // later window id, = from_window + 1
    GrowthRate rate; // > beta, possibly +inf
};

struct TrendChange {
    Pattern pattern;
    std::vector<int> window_span; // consecutive window ids, length >= 2
    char sign;                    // '+' or '-'
    TrendMode mode;
    std::optional<Rational> lambda_value; // lambda mode only

    bool global() const { return window_span.size() > 2; }
};

struct PeriodicChange {
    Pattern pattern;
    int period;
    std::string category;
    std::vector<int> occurrences; // window-pair indices (id of the later window)
    int repetitions;
    bool exact; // raw rational growth rates all equal, jitter 0
};

// freq(P, numerator) / freq(P, denominator); x/0 is +inf for x > 0 and
// undefined for x = 0.
GrowthRate growth_rate(const Pattern& pattern, const TimeWindow& numerator_window,
                       const TimeWindow& denominator_window);

// Category of the first bin whose upper bound is >= gr; the infinite bin
// absorbs +inf. Rejects undefined rates.
std::string theta(const GrowthRate& gr, const DetectConfig& config);

// Patterns whose growth rate from `earlier` to `later` strictly exceeds beta,
// sorted by descending rate, ties by canonical code. The tables must belong
// to consecutive windows and should cover the union of both windows'
// frequent patterns (see evaluate_patterns).
std::vector<EmergingChange> detect_emerging(const FrequencyTable& earlier,
                                            const FrequencyTable& later,
                                            const DetectConfig& config);

// Strict mode: maximal runs of strictly monotone frequency, one change per
// run of at least two windows. Lambda mode: every position is tested as the
// final window of a span starting at the first table, against the mean
// frequency of all prior windows with a trend_epsilon dead band.
std::vector<TrendChange> detect_trends(const std::vector<FrequencyTable>& tables,
                                       const DetectConfig& config);

// A recurrence of equally-categorized growth rates every `period` positions.
// Chain occurrences must stay within jitter of both the anchor grid
// (i_0 + k*period) and the previous occurrence (+- period). Chains shorter
// than min_repetitions and sub-chains of a surviving chain with the same
// period and category are dropped. When suppressed_stable is given it
// receives the number of chains hidden by the stable-category rule.
std::vector<PeriodicChange> detect_periodic(const std::vector<FrequencyTable>& tables,
                                            const DetectConfig& config,
                                            long long* suppressed_stable = nullptr);

// The chain finder behind detect_periodic, on a bare category sequence
// (nullopt marks positions with undefined growth rate). Exposed so reference
// implementations can be compared against it directly.
struct PeriodicChain {
    int period;
    std::string category;
    std::vector<int> occurrences; // 0-based positions into the sequence
};

std::vector<PeriodicChain> find_periodic_chains(
    const std::vector<std::optional<std::string>>& categories, int period_max, int jitter,
    int min_repetitions);

} // namespace evomine

#endif
