#ifndef EVOMINE_ISOMORPHISM_HPP
#define EVOMINE_ISOMORPHISM_HPP

#include "evomine/graph.hpp"

namespace evomine {

// True iff an injective label-preserving mapping takes every pattern node to
// a snapshot node and every pattern edge to an equally-labeled snapshot edge
// (edge-subset semantics, not induced). Pure; thread-safe.
bool is_subgraph(const Pattern& pattern, const Snapshot& snapshot);

} // namespace evomine

#endif
