#ifndef EVOMINE_ORACLE_HPP
#define EVOMINE_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "evomine/detect.hpp"
#include "evomine/graph.hpp"
#include "evomine/miner.hpp"
#include "evomine/windowing.hpp"

// Reference implementations by exhaustive enumeration. Deliberately naive and
// structurally unrelated to the production code paths; used to cross-check
// them on small inputs. Every function enforces hard size limits and throws
// std::invalid_argument beyond them.
namespace evomine::oracle {

inline constexpr int kMaxSnapshotNodes = 10;
inline constexpr int kMaxPatternNodes = 6;
inline constexpr int kMaxMineNodes = 8;
inline constexpr int kMaxMineEdges = 4;
inline constexpr int kMaxWindowSnapshots = 20;
inline constexpr int kMaxSequenceLength = 64;

// Tries every injective node mapping and checks all labels and edges at the
// leaves. Non-induced: extra snapshot edges are fine.
bool oracle_isomorphic(const Pattern& pattern, const Snapshot& snapshot);

// Enumerates every connected edge subset of every snapshot (up to
// config.max_edges), dedupes isomorphism classes by a smallest-permutation
// serialization, and counts support per class with oracle_isomorphic.
// Throws InternalError if two distinct classes collide on a canonical code.
FrequencyTable oracle_mine(const TimeWindow& window, const MiningConfig& config);

// All maximal periodic chains of a category sequence, by breadth-first
// enumeration of every admissible chain followed by maximality, length and
// sub-chain filtering. Same contract as find_periodic_chains.
std::vector<PeriodicChain> oracle_periods(
    const std::vector<std::optional<std::string>>& categories, int period_max, int jitter,
    int min_repetitions);

} // namespace evomine::oracle

#endif
