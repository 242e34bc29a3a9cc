// Copyright 2026 the qtns authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTNS_ORDERING_HPP
#define QTNS_ORDERING_HPP

#include <cstdint>

#include "qtns/graph.hpp"
#include "qtns/network.hpp"

namespace qtns {

/// Greedy min-fill elimination ordering: repeatedly pick the vertex whose
/// elimination adds the fewest fill edges, ties broken by smaller degree and
/// then uniformly at random under the seed.
EliminationOrdering minFillOrdering(const SimpleGraph& g, std::uint64_t seed);

/// Randomized-restart min-fill with perturbed tie-breaking under a restart
/// budget; keeps the best ordering found by (width, simulated flops,
/// lexicographic rank). Restart 0 reproduces minFillOrdering(g, seed). When
/// the budget covers every permutation of a small graph (n <= 8 and
/// restarts >= n!), the search degenerates to exhaustive enumeration and the
/// result is exact.
EliminationOrdering anytimeOrdering(const SimpleGraph& g, int restarts, std::uint64_t seed);

/// Wall-clock convenience wrapper: restarts until the budget elapses (at
/// least one restart always runs). Prefer restart counts for reproducibility.
EliminationOrdering anytimeOrderingSeconds(const SimpleGraph& g, double budgetSeconds,
                                           std::uint64_t seed);

/// Induced width of the ordering on g: the largest clique-at-elimination
/// size minus one. Upper-bounds the treewidth of g.
int treewidthUpperBound(const EliminationOrdering& ord, const SimpleGraph& g);

/// Bags and tree induced by eliminating in this order; width equals
/// treewidthUpperBound(ord, g).
TreeDecomposition decompositionFromOrdering(const SimpleGraph& g, const EliminationOrdering& ord);

/// Reads an elimination ordering of the network's line graph as a wire
/// elimination order; predicted cost comes from the abstract merge model.
ContractionPlan planFromOrdering(const NetworkShape& shape, const EliminationOrdering& ord);

/// Line-graph planner: anytime ordering of L(G) turned into a plan.
ContractionPlan lineGraphPlan(const NetworkShape& shape, int restarts, std::uint64_t seed);

/// Stochastic planner: picks random wires, accepting a contraction when
/// rank(C) - max(rank(A), rank(B)) <= Threshold; Threshold starts at -1,
/// relaxes by one after maxRejections consecutive rejections, and resets to
/// -1 on every acceptance. maxRejections <= 0 selects the default of twice
/// the wire count.
ContractionPlan stochasticPlan(const NetworkShape& shape, int maxRejections, std::uint64_t seed);

}  // namespace qtns

#endif
