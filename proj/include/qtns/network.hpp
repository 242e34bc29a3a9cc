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

#ifndef QTNS_NETWORK_HPP
#define QTNS_NETWORK_HPP

#include <span>
#include <utility>
#include <vector>

#include "qtns/circuit.hpp"
#include "qtns/tensor.hpp"

namespace qtns {

/// Closed tensor network: every tensor index label appears as exactly one
/// endpoint slot of exactly one wire (no open edges) and the ranks sum to
/// twice the wire count. Node and wire ids are vector positions. Circuits
/// without entangling gates build one component per qubit line; every
/// component contracts to a scalar and the network's value is their product.
struct TensorNetwork {
    std::vector<Tensor> nodes;
    std::vector<std::pair<NodeId, NodeId>> wires;

    TensorNetwork() = default;
    TensorNetwork(std::vector<Tensor> nodes, std::vector<std::pair<NodeId, NodeId>> wires);

    int nodeCount() const { return static_cast<int>(nodes.size()); }
    int wireCount() const { return static_cast<int>(wires.size()); }
};

/// Ranks and wires only; all planning and cost prediction runs on this
/// abstract view, no tensor data needed.
struct NetworkShape {
    std::vector<int> ranks;
    std::vector<std::pair<NodeId, NodeId>> wires;
};

NetworkShape shapeOf(const TensorNetwork& net);

/// Ordered wire elimination with its predicted cost on the abstract merge
/// model. `width` is the tree-decomposition width for line-graph plans and
/// predictedPeakRank - 1 for plans without an ordering behind them.
struct ContractionPlan {
    std::vector<WireId> order;
    std::uint64_t predictedFlops = 0;
    int predictedPeakRank = 0;
    int width = 0;
};

struct PlanStats {
    std::uint64_t flops = 0;
    int peakRank = 0;
};

/// Replays a wire order on the abstract graph with the same merge semantics
/// as executePlan: eliminating a wire contracts all wires shared by its two
/// endpoint super-nodes at once, and wires consumed by an earlier merge are
/// skipped. Throws if `order` is not a permutation of the wire ids.
PlanStats simulatePlan(const NetworkShape& shape, std::span<const WireId> order);

/// One input node per qubit, one node per gate in temporal order, one
/// measurement node per qubit; wires follow the circuit's qubit timelines.
TensorNetwork buildNetwork(const Circuit& c);

struct ExecutionResult {
    Complex value{0.0, 0.0};
    std::uint64_t flops = 0;
    int peakRank = 0;
};

/// Contracts the network to a scalar along the plan. Rank-0 intermediates
/// are folded into a running scalar factor; a merge that leaves a self-loop
/// traces it out immediately. Throws RankCapError (annotated with the
/// offending step) if an intermediate would exceed cfg.rankCap.
ExecutionResult executePlan(const TensorNetwork& net, const ContractionPlan& plan,
                            const ExecConfig& cfg = {});

}  // namespace qtns

#endif
