#ifndef EVOMINE_MINER_HPP
#define EVOMINE_MINER_HPP

#include <map>
#include <string>
#include <vector>

#include "evomine/graph.hpp"
#include "evomine/rational.hpp"
#include "evomine/windowing.hpp"

namespace evomine {

struct MiningConfig {
    // Minimum relative frequency; a pattern is frequent when freq > alpha,
    // strictly. alpha = 1 therefore mines nothing.
    Rational alpha = Rational(1, 2);
    int max_edges = 3;

    void validate() const;
};

// Per-window map from canonical pattern code to exact relative frequency,
// stored as support / window size with no reduction or rounding.
class FrequencyTable {
public:
    struct Entry {
        Pattern pattern;
        long long support = 0;
        long long window_size = 1;

        Rational freq() const { return Rational(support, window_size); }
    };

    FrequencyTable(int window_id, long long window_size);

    int window_id() const { return window_id_; }
    long long window_size() const { return window_size_; }

    const std::map<std::string, Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const std::string& code) const { return entries_.count(code) != 0; }

    // Frequency of a pattern by canonical code; 0 when absent.
    Rational freq_of(const std::string& code) const;

    void insert(Pattern pattern, long long support);

private:
    int window_id_;
    long long window_size_;
    std::map<std::string, Entry> entries_;
};

// Exact fraction of the window's snapshots containing the pattern. A snapshot
// counts once regardless of how many embeddings it holds.
Rational frequency(const Pattern& pattern, const TimeWindow& window);

// Every connected pattern with at most max_edges edges and relative frequency
// strictly above alpha, one entry per isomorphism class. Pattern-growth over
// minimum DFS codes with anti-monotone support pruning.
FrequencyTable mine_frequent(const TimeWindow& window, const MiningConfig& config);

// Exact frequencies of the given patterns in the window, unfiltered (entries
// may be 0 or below alpha). Growth-rate detection needs the same pattern's
// frequency on both sides of a window boundary, frequent or not.
FrequencyTable evaluate_patterns(const std::vector<Pattern>& patterns,
                                 const TimeWindow& window);

} // namespace evomine

#endif
