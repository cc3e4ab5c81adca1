#include "evomine/detect.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "evomine/errors.hpp"

namespace evomine {

void DetectConfig::validate() const {
    if (beta <= Rational(1)) throw ConfigError("beta must be > 1");
    if (trend_epsilon < Rational(0)) throw ConfigError("trend-epsilon must be >= 0");
    if (period_max < 1) throw ConfigError("period-max must be >= 1");
    if (jitter < 0) throw ConfigError("jitter must be >= 0");
    if (min_repetitions < 2) throw ConfigError("min-repetitions must be >= 2");
    if (!theta_bins.empty()) {
        if (!theta_bins.back().infinite)
            throw ConfigError("the last theta bin must be the unbounded one (upper bound inf)");
        for (std::size_t i = 0; i < theta_bins.size(); ++i) {
            const ThetaBin& bin = theta_bins[i];
            if (bin.category.empty()) throw ConfigError("theta bin categories must be non-empty");
            if (bin.infinite && i + 1 != theta_bins.size())
                throw ConfigError("only the last theta bin may be unbounded");
            if (!bin.infinite) {
                if (bin.upper < Rational(0))
                    throw ConfigError("theta bin upper bounds must be >= 0");
                if (i > 0 && theta_bins[i - 1].upper >= bin.upper)
                    throw ConfigError("theta bin upper bounds must be strictly increasing");
            }
        }
    }
}

std::vector<ThetaBin> DetectConfig::effective_theta_bins() const {
    if (!theta_bins.empty()) return theta_bins;
    return {
        {Rational(1) / beta, false, "shrinking"},
        {beta, false, "stable"},
        {Rational(0), true, "growing"},
    };
}

GrowthRate growth_rate(const Pattern& pattern, const TimeWindow& numerator_window,
                       const TimeWindow& denominator_window) {
    return GrowthRate::ratio(frequency(pattern, numerator_window),
                             frequency(pattern, denominator_window));
}

std::string theta(const GrowthRate& gr, const DetectConfig& config) {
    if (gr.is_undefined())
        throw std::invalid_argument("theta is not defined for an undefined growth rate");
    config.validate();
    const std::vector<ThetaBin> bins = config.effective_theta_bins();
    for (const ThetaBin& bin : bins) {
        if (bin.infinite) return bin.category;
        if (!gr.is_infinite() && gr.value() <= bin.upper) return bin.category;
    }
    throw InternalError("theta bins failed to cover a growth rate");
}

namespace {

void require_consecutive(const std::vector<FrequencyTable>& tables, std::size_t min_count,
                         const char* what) {
    if (tables.size() < min_count)
        throw std::invalid_argument(std::string(what) + " needs at least " +
                                    std::to_string(min_count) + " frequency tables");
    for (std::size_t i = 1; i < tables.size(); ++i) {
        if (tables[i].window_id() != tables[i - 1].window_id() + 1)
            throw std::invalid_argument(
                std::string(what) + " requires tables of consecutive windows, got ids " +
                std::to_string(tables[i - 1].window_id()) + " then " +
                std::to_string(tables[i].window_id()));
    }
}

// Union of all pattern codes, each with a representative Pattern object.
std::map<std::string, const Pattern*> union_patterns(
    const std::vector<const FrequencyTable*>& tables) {
    std::map<std::string, const Pattern*> out;
    for (const FrequencyTable* table : tables)
        for (const auto& [code, entry] : table->entries()) out.emplace(code, &entry.pattern);
    return out;
}

} // namespace

std::vector<EmergingChange> detect_emerging(const FrequencyTable& earlier,
                                            const FrequencyTable& later,
                                            const DetectConfig& config) {
    config.validate();
    if (later.window_id() != earlier.window_id() + 1)
        throw std::invalid_argument("detect_emerging requires consecutive windows, got ids " +
                                    std::to_string(earlier.window_id()) + " and " +
                                    std::to_string(later.window_id()));
    std::vector<EmergingChange> out;
    for (const auto& [code, pattern] : union_patterns({&earlier, &later})) {
        GrowthRate rate = GrowthRate::ratio(later.freq_of(code), earlier.freq_of(code));
        if (rate.is_undefined()) continue;
        if (rate.exceeds(config.beta))
            out.push_back({*pattern, earlier.window_id(), later.window_id(), rate});
    }
    std::sort(out.begin(), out.end(), [](const EmergingChange& a, const EmergingChange& b) {
        if (!(a.rate == b.rate)) return a.rate.greater(b.rate);
        return a.pattern.code() < b.pattern.code();
    });
    return out;
}

std::vector<TrendChange> detect_trends(const std::vector<FrequencyTable>& tables,
                                       const DetectConfig& config) {
    config.validate();
    require_consecutive(tables, 2, "detect_trends");
    std::vector<const FrequencyTable*> ptrs;
    for (const FrequencyTable& t : tables) ptrs.push_back(&t);
    const std::size_t m = tables.size();

    std::vector<TrendChange> out;
    for (const auto& [code, pattern] : union_patterns(ptrs)) {
        std::vector<Rational> f(m);
        for (std::size_t i = 0; i < m; ++i) f[i] = tables[i].freq_of(code);

        if (config.trend_mode == TrendMode::Strict) {
            for (char sign : {'+', '-'}) {
                auto step = [&](std::size_t k) {
                    return sign == '+' ? f[k + 1] > f[k] : f[k + 1] < f[k];
                };
                std::size_t i = 0;
                while (i + 1 < m) {
                    if (!step(i)) {
                        ++i;
                        continue;
                    }
                    std::size_t j = i;
                    while (j + 1 < m && step(j)) ++j; // run covers windows i..j
                    std::vector<int> span;
                    for (std::size_t k = i; k <= j; ++k) span.push_back(tables[k].window_id());
                    out.push_back({*pattern, std::move(span), sign, TrendMode::Strict, {}});
                    i = j;
                }
            }
        } else {
            Rational sum(0);
            for (std::size_t j = 1; j < m; ++j) {
                sum += f[j - 1];
                Rational lambda = sum / Rational(static_cast<long long>(j));
                char sign = 0;
                if (f[j] > lambda + config.trend_epsilon)
                    sign = '+';
                else if (f[j] < lambda - config.trend_epsilon)
                    sign = '-';
                if (sign == 0) continue;
                std::vector<int> span;
                for (std::size_t k = 0; k <= j; ++k) span.push_back(tables[k].window_id());
                out.push_back({*pattern, std::move(span), sign, TrendMode::Lambda, lambda});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const TrendChange& a, const TrendChange& b) {
        if (a.pattern.code() != b.pattern.code()) return a.pattern.code() < b.pattern.code();
        if (a.window_span.front() != b.window_span.front())
            return a.window_span.front() < b.window_span.front();
        if (a.window_span.back() != b.window_span.back())
            return a.window_span.back() < b.window_span.back();
        return a.sign < b.sign;
    });
    return out;
}

std::vector<PeriodicChain> find_periodic_chains(
    const std::vector<std::optional<std::string>>& categories, int period_max, int jitter,
    int min_repetitions) {
    if (period_max < 1) throw std::invalid_argument("period_max must be >= 1");
    if (jitter < 0) throw std::invalid_argument("jitter must be >= 0");
    if (min_repetitions < 2) throw std::invalid_argument("min_repetitions must be >= 2");
    const int n = static_cast<int>(categories.size());
    constexpr long long kSearchCap = 2000000;
    long long visited = 0;

    std::vector<PeriodicChain> out;
    for (int period = 1; period <= period_max; ++period) {
        std::map<std::string, std::set<std::vector<int>>> maximal;
        std::vector<int> chain;
        std::string cat;
        // Depth-first over admissible extensions; a chain is recorded when no
        // further occurrence fits both the anchor grid and the previous-gap
        // window.
        std::function<void(int)> extend = [&](int k) {
            if (++visited > kSearchCap)
                throw InternalError("periodic chain search exceeded the safety cap; "
                                    "reduce period-max or jitter");
            const long long prev = chain.back();
            const long long grid = static_cast<long long>(chain.front()) +
                                   static_cast<long long>(k) * period;
            const long long lo =
                std::max({prev + 1, prev + period - jitter, grid - jitter});
            const long long hi =
                std::min({static_cast<long long>(n) - 1, prev + period + jitter, grid + jitter});
            bool extended = false;
            for (long long i = lo; i <= hi; ++i) {
                const auto& ci = categories[static_cast<std::size_t>(i)];
                if (!ci || *ci != cat) continue;
                extended = true;
                chain.push_back(static_cast<int>(i));
                extend(k + 1);
                chain.pop_back();
            }
            if (!extended) maximal[cat].insert(chain);
        };
        for (int start = 0; start < n; ++start) {
            if (!categories[start]) continue;
            cat = *categories[start];
            chain.assign(1, start);
            extend(1);
        }

        for (const auto& [category, chains] : maximal) {
            std::vector<const std::vector<int>*> survivors;
            for (const std::vector<int>& occ : chains)
                if (static_cast<int>(occ.size()) >= min_repetitions) survivors.push_back(&occ);
            for (const std::vector<int>* occ : survivors) {
                bool subsumed = false;
                for (const std::vector<int>* other : survivors) {
                    if (other->size() > occ->size() &&
                        std::includes(other->begin(), other->end(), occ->begin(), occ->end())) {
                        subsumed = true;
                        break;
                    }
                }
                if (!subsumed) out.push_back({period, category, *occ});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PeriodicChain& a, const PeriodicChain& b) {
        if (a.period != b.period) return a.period < b.period;
        if (a.category != b.category) return a.category < b.category;
        return a.occurrences < b.occurrences;
    });
    return out;
}

std::vector<PeriodicChange> detect_periodic(const std::vector<FrequencyTable>& tables,
                                            const DetectConfig& config,
                                            long long* suppressed_stable) {
    config.validate();
    require_consecutive(tables, 2, "detect_periodic");
    std::vector<const FrequencyTable*> ptrs;
    for (const FrequencyTable& t : tables) ptrs.push_back(&t);
    const std::size_t m = tables.size();
    const std::string stable_category = theta(GrowthRate::finite(Rational(1)), config);
    if (suppressed_stable) *suppressed_stable = 0;

    std::vector<PeriodicChange> out;
    for (const auto& [code, pattern] : union_patterns(ptrs)) {
        std::vector<GrowthRate> rates(m - 1, GrowthRate::undefined());
        std::vector<std::optional<std::string>> cats(m - 1);
        for (std::size_t p = 0; p + 1 < m; ++p) {
            rates[p] = GrowthRate::ratio(tables[p + 1].freq_of(code), tables[p].freq_of(code));
            if (!rates[p].is_undefined()) cats[p] = theta(rates[p], config);
        }
        for (const PeriodicChain& chain :
             find_periodic_chains(cats, config.period_max, config.jitter,
                                  config.min_repetitions)) {
            if (chain.category == stable_category && !config.include_stable_periodic) {
                if (suppressed_stable) ++*suppressed_stable;
                continue;
            }
            bool exact = config.jitter == 0;
            for (std::size_t k = 0; exact && k < chain.occurrences.size(); ++k) {
                const GrowthRate& r = rates[chain.occurrences[k]];
                if (r.is_infinite() || !(r == rates[chain.occurrences[0]])) exact = false;
            }
            std::vector<int> occurrences;
            for (int p : chain.occurrences)
                occurrences.push_back(tables[p + 1].window_id());
            out.push_back({*pattern, chain.period, chain.category, std::move(occurrences),
                           static_cast<int>(chain.occurrences.size()), exact});
        }
    }
    std::sort(out.begin(), out.end(), [](const PeriodicChange& a, const PeriodicChange& b) {
        if (a.pattern.code() != b.pattern.code()) return a.pattern.code() < b.pattern.code();
        if (a.period != b.period) return a.period < b.period;
        if (a.category != b.category) return a.category < b.category;
        return a.occurrences < b.occurrences;
    });
    return out;
}

} // namespace evomine
