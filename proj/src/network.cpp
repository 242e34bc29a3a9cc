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

#include "qtns/network.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qtns {

namespace {

std::uint64_t satPow4(int e) {
    return e >= 32 ? ~std::uint64_t{0} : pow4(e);
}

struct UnionFind {
    std::vector<NodeId> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    NodeId find(NodeId x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
};

void checkPlanCoverage(std::span<const WireId> order, std::size_t wireCount) {
    if (order.size() != wireCount)
        throw std::invalid_argument("plan does not cover the network's wires");
    std::vector<bool> seen(wireCount, false);
    for (WireId w : order) {
        if (w < 0 || static_cast<std::size_t>(w) >= wireCount)
            throw std::invalid_argument("plan references unknown wire " + std::to_string(w));
        if (seen[static_cast<std::size_t>(w)])
            throw std::invalid_argument("plan eliminates wire " + std::to_string(w) + " twice");
        seen[static_cast<std::size_t>(w)] = true;
    }
}

// Sorted incident-wire lists per super-node; merging returns the shared
// wires and leaves the union minus them on the surviving root.
struct IncidenceTable {
    std::vector<std::vector<WireId>> lists;

    explicit IncidenceTable(const std::vector<std::pair<NodeId, NodeId>>& wires, int nodeCount)
        : lists(static_cast<std::size_t>(nodeCount)) {
        for (std::size_t w = 0; w < wires.size(); ++w) {
            lists[static_cast<std::size_t>(wires[w].first)].push_back(static_cast<WireId>(w));
            lists[static_cast<std::size_t>(wires[w].second)].push_back(static_cast<WireId>(w));
        }
        for (auto& l : lists) std::sort(l.begin(), l.end());
    }

    std::vector<WireId> mergeInto(NodeId keep, NodeId drop) {
        auto& a = lists[static_cast<std::size_t>(keep)];
        auto& b = lists[static_cast<std::size_t>(drop)];
        std::vector<WireId> shared, rest;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(rest));
        a = std::move(rest);
        b.clear();
        b.shrink_to_fit();
        return shared;
    }
};

}  // namespace

TensorNetwork::TensorNetwork(std::vector<Tensor> n, std::vector<std::pair<NodeId, NodeId>> w)
    : nodes(std::move(n)), wires(std::move(w)) {
    const int nodeCount = static_cast<int>(nodes.size());
    const int wireCount = static_cast<int>(wires.size());
    std::vector<int> slotCount(static_cast<std::size_t>(wireCount), 0);
    int rankSum = 0;
    for (const Tensor& t : nodes) {
        rankSum += t.rank();
        for (WireId label : t.indices()) {
            if (label < 0 || label >= wireCount)
                throw std::invalid_argument("tensor index label is not a wire id");
            ++slotCount[static_cast<std::size_t>(label)];
        }
    }
    if (rankSum != 2 * wireCount)
        throw std::invalid_argument("rank sum must equal twice the wire count");
    for (int w2 = 0; w2 < wireCount; ++w2) {
        const auto [u, v] = wires[static_cast<std::size_t>(w2)];
        if (u < 0 || u >= nodeCount || v < 0 || v >= nodeCount)
            throw std::invalid_argument("wire endpoint is not a node id");
        if (u == v) throw std::invalid_argument("self-loop wire in network");
        if (slotCount[static_cast<std::size_t>(w2)] != 2 ||
            !nodes[static_cast<std::size_t>(u)].hasIndex(w2) ||
            !nodes[static_cast<std::size_t>(v)].hasIndex(w2))
            throw std::invalid_argument("wire " + std::to_string(w2) +
                                        " must label exactly its two endpoint tensors");
    }
}

NetworkShape shapeOf(const TensorNetwork& net) {
    NetworkShape shape;
    shape.ranks.reserve(net.nodes.size());
    for (const Tensor& t : net.nodes) shape.ranks.push_back(t.rank());
    shape.wires = net.wires;
    return shape;
}

PlanStats simulatePlan(const NetworkShape& shape, std::span<const WireId> order) {
    checkPlanCoverage(order, shape.wires.size());
    UnionFind uf(static_cast<int>(shape.ranks.size()));
    IncidenceTable inc(shape.wires, static_cast<int>(shape.ranks.size()));
    std::vector<int> rank = shape.ranks;
    std::vector<bool> consumed(shape.wires.size(), false);

    PlanStats stats;
    for (WireId w : order) {
        if (consumed[static_cast<std::size_t>(w)]) continue;
        const NodeId a = uf.find(shape.wires[static_cast<std::size_t>(w)].first);
        const NodeId b = uf.find(shape.wires[static_cast<std::size_t>(w)].second);
        if (a == b) continue;
        const int ra = rank[static_cast<std::size_t>(a)];
        const int rb = rank[static_cast<std::size_t>(b)];
        const std::vector<WireId> shared = inc.mergeInto(a, b);
        for (WireId s : shared) consumed[static_cast<std::size_t>(s)] = true;
        const int y = static_cast<int>(shared.size());
        const int rc = ra + rb - 2 * y;
        stats.flops = saturatingAdd(stats.flops, satPow4(ra + rb - y));
        stats.peakRank = std::max({stats.peakRank, ra, rb, rc});
        uf.parent[static_cast<std::size_t>(b)] = a;
        rank[static_cast<std::size_t>(a)] = rc;
    }
    return stats;
}

TensorNetwork buildNetwork(const Circuit& c) {
    if (c.numQubits <= 0) throw std::invalid_argument("circuit has no qubits");
    const int n = c.numQubits;
    std::vector<Tensor> nodes;
    std::vector<std::pair<NodeId, NodeId>> wires;
    std::vector<WireId> cur(static_cast<std::size_t>(n));

    auto newWire = [&](NodeId producer) {
        wires.emplace_back(producer, -1);
        return static_cast<WireId>(wires.size() - 1);
    };

    for (int q = 0; q < n; ++q) {
        const NodeId node = static_cast<NodeId>(nodes.size());
        const WireId w = newWire(node);
        nodes.push_back(makeInputTensor().relabeled({w}));
        cur[static_cast<std::size_t>(q)] = w;
    }

    for (const GateApplication& op : c.ops) {
        const NodeId node = static_cast<NodeId>(nodes.size());
        const Tensor gate = gateSuperoperator(op, c);
        if (op.arity() == 1) {
            const WireId in = cur[static_cast<std::size_t>(op.qubit0)];
            wires[static_cast<std::size_t>(in)].second = node;
            const WireId out = newWire(node);
            nodes.push_back(gate.relabeled({out, in}));
            cur[static_cast<std::size_t>(op.qubit0)] = out;
        } else {
            const WireId inA = cur[static_cast<std::size_t>(op.qubit0)];
            const WireId inB = cur[static_cast<std::size_t>(op.qubit1)];
            wires[static_cast<std::size_t>(inA)].second = node;
            wires[static_cast<std::size_t>(inB)].second = node;
            const WireId outA = newWire(node);
            const WireId outB = newWire(node);
            nodes.push_back(gate.relabeled({outA, outB, inA, inB}));
            cur[static_cast<std::size_t>(op.qubit0)] = outA;
            cur[static_cast<std::size_t>(op.qubit1)] = outB;
        }
    }

    for (int q = 0; q < n; ++q) {
        const NodeId node = static_cast<NodeId>(nodes.size());
        const WireId in = cur[static_cast<std::size_t>(q)];
        wires[static_cast<std::size_t>(in)].second = node;
        nodes.push_back(
            makeMeasurementTensor(c.measurements[static_cast<std::size_t>(q)]).relabeled({in}));
    }

    return TensorNetwork(std::move(nodes), std::move(wires));
}

ExecutionResult executePlan(const TensorNetwork& net, const ContractionPlan& plan,
                            const ExecConfig& cfg) {
    checkPlanCoverage(plan.order, net.wires.size());
    UnionFind uf(net.nodeCount());
    IncidenceTable inc(net.wires, net.nodeCount());
    std::vector<Tensor> live = net.nodes;
    std::vector<bool> consumed(net.wires.size(), false);

    ExecutionResult res;
    for (std::size_t step = 0; step < plan.order.size(); ++step) {
        const WireId w = plan.order[step];
        if (consumed[static_cast<std::size_t>(w)]) continue;
        const NodeId a = uf.find(net.wires[static_cast<std::size_t>(w)].first);
        const NodeId b = uf.find(net.wires[static_cast<std::size_t>(w)].second);
        if (a == b) continue;

        for (WireId s : inc.mergeInto(a, b)) consumed[static_cast<std::size_t>(s)] = true;

        Tensor& ta = live[static_cast<std::size_t>(a)];
        Tensor& tb = live[static_cast<std::size_t>(b)];
        try {
            auto [merged, cost] = contract(std::move(ta), std::move(tb), cfg);
            res.flops = saturatingAdd(res.flops, cost.flops);
            res.peakRank = std::max(res.peakRank, cost.peakRank);
            // a merge never leaves a self-loop under all-at-once elimination,
            // but trace one out if it ever appears
            for (int i = 0; i < merged.rank(); ++i) {
                const WireId label = merged.indices()[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < merged.rank(); ++j) {
                    if (merged.indices()[static_cast<std::size_t>(j)] == label) {
                        merged = selfTrace(merged, label);
                        consumed[static_cast<std::size_t>(label)] = true;
                        i = -1;
                        break;
                    }
                }
            }
            ta = std::move(merged);
        } catch (const RankCapError& e) {
            throw RankCapError(e.attemptedRank, e.rankCap, static_cast<int>(step), w);
        }
        tb = Tensor::scalar(1.0);
        uf.parent[static_cast<std::size_t>(b)] = a;
    }

    // every wire is consumed, so all surviving roots are scalars; a rank-0
    // intermediate formed mid-run simply sits in its slot until collected
    Complex value{1.0, 0.0};
    for (NodeId v = 0; v < net.nodeCount(); ++v) {
        if (uf.find(v) != v) continue;
        const Tensor& t = live[static_cast<std::size_t>(v)];
        if (t.rank() != 0) throw std::logic_error("plan left an uncontracted tensor");
        value *= t.entries()[0];
    }
    res.value = value;
    return res;
}

}  // namespace qtns
