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

#include <doctest.h>

#include <numeric>

#include "qtns/ordering.hpp"
#include "qtns/qaoa.hpp"
#include "support.hpp"

using namespace qtns;

namespace {

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int v = 0; v < n; ++v) g.addEdge(v, (v + 1) % n);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.addEdge(u, v);
    return g;
}

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.addEdge(v, v + 1);
    return g;
}

SimpleGraph randomTree(int n, Rng& rng) {
    SimpleGraph g(n);
    for (int v = 1; v < n; ++v) g.addEdge(v, rng.intIn(0, v - 1));
    return g;
}

/// Tetrahedral network of rank-3 tensors: 4 nodes, 6 wires, K4 geometry.
TensorNetwork tetrahedron() {
    // node 0: wires 0,1,2; node 1: wires 0,3,4; node 2: wires 1,3,5; node 3: wires 2,4,5
    std::vector<Complex> ones(64, Complex{1.0, 0.0});
    std::vector<Tensor> nodes;
    nodes.emplace_back(std::vector<WireId>{0, 1, 2}, ones);
    nodes.emplace_back(std::vector<WireId>{0, 3, 4}, ones);
    nodes.emplace_back(std::vector<WireId>{1, 3, 5}, ones);
    nodes.emplace_back(std::vector<WireId>{2, 4, 5}, ones);
    return TensorNetwork(std::move(nodes), {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("line graph of small graphs") {
    const SimpleGraph k3Line = lineGraph(cycle(3));
    CHECK(k3Line.n == 3);
    CHECK(k3Line.edgeCount() == 3);  // triangle maps to itself

    const SimpleGraph pathLine = lineGraph(path(3));
    CHECK(pathLine.n == 2);
    CHECK(pathLine.edgeCount() == 1);

    SimpleGraph star(4);
    star.addEdge(0, 1);
    star.addEdge(0, 2);
    star.addEdge(0, 3);
    const SimpleGraph starLine = lineGraph(star);
    CHECK(starLine.n == 3);
    CHECK(starLine.edgeCount() == 3);  // all three spokes meet at the hub
}

TEST_CASE("line graph of a multigraph keeps parallel edges distinct") {
    const std::vector<std::pair<int, int>> wires = {{0, 1}, {0, 1}};
    const SimpleGraph lg = lineGraph(std::span<const std::pair<int, int>>(wires));
    CHECK(lg.n == 2);
    CHECK(lg.edgeCount() == 1);
}

TEST_CASE("min-fill widths on canonical graphs") {
    Rng rng(501);
    // trees have width 1
    for (int trial = 0; trial < 5; ++trial) {
        const SimpleGraph t = randomTree(rng.intIn(2, 9), rng);
        CHECK(treewidthUpperBound(minFillOrdering(t, trial), t) == 1);
    }
    const SimpleGraph c5 = cycle(5);
    CHECK(treewidthUpperBound(minFillOrdering(c5, 1), c5) == 2);
    CHECK(test::treewidthBruteForce(c5) == 2);
    const SimpleGraph k4 = complete(4);
    CHECK(treewidthUpperBound(minFillOrdering(k4, 1), k4) == 3);
}

TEST_CASE("anytime ordering never loses to plain min-fill") {
    Rng rng(503);
    for (int trial = 0; trial < 6; ++trial) {
        const SimpleGraph g = test::randomConnectedGraph(rng.intIn(4, 9), rng);
        const std::uint64_t seed = rng.next();
        const int plain = treewidthUpperBound(minFillOrdering(g, seed), g);
        for (int restarts : {1, 3, 8}) {
            const int best = treewidthUpperBound(anytimeOrdering(g, restarts, seed), g);
            CHECK(best <= plain);
        }
    }
}

TEST_CASE("anytime width is non-increasing in the budget") {
    Rng rng(509);
    const SimpleGraph g = test::randomConnectedGraph(9, rng);
    int prev = g.n;
    for (int restarts = 1; restarts <= 12; ++restarts) {
        const int w = treewidthUpperBound(anytimeOrdering(g, restarts, 77), g);
        CHECK(w <= prev);
        prev = w;
    }
}

TEST_CASE("exhaustive budgets reach the exact treewidth") {
    Rng rng(521);
    const SimpleGraph c5 = cycle(5);
    CHECK(treewidthUpperBound(anytimeOrdering(c5, 120, 5), c5) == 2);
    const SimpleGraph k4 = complete(4);
    CHECK(treewidthUpperBound(anytimeOrdering(k4, 24, 5), k4) == 3);
    for (int trial = 0; trial < 4; ++trial) {
        const int n = rng.intIn(4, 6);
        const SimpleGraph g = test::randomConnectedGraph(n, rng);
        const int exact = test::treewidthBruteForce(g);
        const EliminationOrdering ord = anytimeOrdering(g, 720, 9);
        CHECK(treewidthUpperBound(ord, g) == exact);
        CHECK(treewidthUpperBound(minFillOrdering(g, 9), g) >= exact);
    }
}

TEST_CASE("derived tree decompositions pass the validator") {
    Rng rng(523);
    for (int trial = 0; trial < 10; ++trial) {
        const SimpleGraph g = test::randomConnectedGraph(rng.intIn(2, 9), rng);
        const EliminationOrdering ord = minFillOrdering(g, rng.next());
        const TreeDecomposition td = decompositionFromOrdering(g, ord);
        const auto err = validateTreeDecomposition(g, td);
        CHECK_MESSAGE(!err.has_value(), err.value_or(""));
        CHECK(td.width() == treewidthUpperBound(ord, g));
    }
}

TEST_CASE("validator rejects broken decompositions") {
    const SimpleGraph g = cycle(4);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}};  // edge (3,0) never covered
    td.treeEdges = {{0, 1}, {1, 2}};
    CHECK(validateTreeDecomposition(g, td).has_value());

    TreeDecomposition broken;
    broken.bags = {{0, 1}, {2, 3}, {1, 2}, {3, 0}};
    broken.treeEdges = {{0, 2}, {1, 3}, {0, 3}};  // vertex 2's bags are not adjacent
    CHECK(validateTreeDecomposition(g, broken).has_value());
}

TEST_CASE("treewidth upper bound cross-checks on random regular graphs") {
    Rng rng(541);
    const MaxCutInstance inst = randomRegularGraph(8, 3, 17);
    const EliminationOrdering ord = minFillOrdering(inst.graph, 3);
    const int viaSim = treewidthUpperBound(ord, inst.graph);
    CHECK(viaSim == test::orderingWidthRef(inst.graph, ord.order));
    CHECK(viaSim == decompositionFromOrdering(inst.graph, ord).width());
}

TEST_CASE("plans from orderings on tiny networks") {
    const TensorNetwork pair(
        {makeInputTensor().relabeled({0}),
         makeMeasurementTensor(MeasurementKind::Trace).relabeled({0})},
        {{0, 1}});
    const ContractionPlan plan = planFromOrdering(shapeOf(pair), EliminationOrdering{{0}});
    CHECK(plan.order == std::vector<WireId>{0});
    CHECK(plan.predictedFlops == 4);

    // Bell network: every ordering keeps the peak rank at 4 or below
    const Circuit bell = parseCircuit("2\nH 0\nCNOT 0 1\nMEASZ 0\nMEASZ 1");
    const TensorNetwork net = buildNetwork(bell);
    std::vector<int> perm(net.wires.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const ContractionPlan p = planFromOrdering(shapeOf(net), EliminationOrdering{perm});
        CHECK(p.predictedPeakRank <= 4);
        CHECK(executePlan(net, p).flops == p.predictedFlops);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("ordering size mismatches are rejected") {
    const Circuit bell = parseCircuit("2\nH 0\nCNOT 0 1");
    const NetworkShape shape = shapeOf(buildNetwork(bell));
    CHECK_THROWS_AS(static_cast<void>(planFromOrdering(shape, EliminationOrdering{{0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("stochastic planning on a path accepts every step in order") {
    const Circuit chain = parseCircuit("1\nH 0\nS 0\nT 0\nX 0");
    const TensorNetwork net = buildNetwork(chain);
    const NetworkShape shape = shapeOf(net);
    const ContractionPlan plan = stochasticPlan(shape, 4, 2024);
    CHECK(plan.order.size() == shape.wires.size());
    CHECK(plan.predictedPeakRank <= 2);
    // replay: no step may cost more than 0 on a chain
    std::vector<int> rank = shape.ranks;
    std::vector<NodeId> parent(shape.ranks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    std::vector<bool> consumed(shape.wires.size(), false);
    for (WireId w : plan.order) {
        if (consumed[static_cast<std::size_t>(w)]) continue;
        const NodeId a = find(shape.wires[static_cast<std::size_t>(w)].first);
        const NodeId b = find(shape.wires[static_cast<std::size_t>(w)].second);
        if (a == b) continue;
        const int rc = rank[static_cast<std::size_t>(a)] + rank[static_cast<std::size_t>(b)] - 2;
        CHECK(rc - std::max(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]) <=
              0);
        consumed[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(b)] = a;
        rank[static_cast<std::size_t>(a)] = rc;
    }
}

TEST_CASE("tetrahedral network needs a relaxed threshold") {
    const TensorNetwork net = tetrahedron();
    const NetworkShape shape = shapeOf(net);
    // any first merge takes two rank-3 nodes sharing one wire to rank 4
    const ContractionPlan plan = stochasticPlan(shape, 3, 99);
    REQUIRE(!plan.order.empty());
    const WireId first = plan.order[0];
    const auto [a, b] = shape.wires[static_cast<std::size_t>(first)];
    const int rc = shape.ranks[static_cast<std::size_t>(a)] +
                   shape.ranks[static_cast<std::size_t>(b)] - 2;
    CHECK(rc - 3 == 1);  // cost 1: only admissible once Threshold reaches 1
    CHECK(plan.predictedPeakRank >= 4);
    // all-ones tensors: the scalar is one term per joint wire assignment
    const ExecutionResult r = executePlan(net, plan);
    CHECK(r.value.real() == doctest::Approx(4096.0));  // 4^6
}

TEST_CASE("stochastic plans are deterministic under a fixed seed") {
    Rng rng(547);
    const Circuit c = test::randomCircuit(4, 12, false, true, rng);
    const NetworkShape shape = shapeOf(buildNetwork(c));
    const ContractionPlan p1 = stochasticPlan(shape, 0, 31337);
    const ContractionPlan p2 = stochasticPlan(shape, 0, 31337);
    CHECK(p1.order == p2.order);
    CHECK(p1.predictedFlops == p2.predictedFlops);
    const ContractionPlan p3 = stochasticPlan(shape, 0, 31338);
    CHECK((p3.order != p1.order || p3.predictedFlops == p1.predictedFlops));
}

TEST_CASE("both planners agree with each other on the executed scalar") {
    Rng rng(557);
    for (int trial = 0; trial < 10; ++trial) {
        const Circuit c = test::randomCircuit(rng.intIn(2, 5), 14, false, true, rng);
        const TensorNetwork net = buildNetwork(c);
        const NetworkShape shape = shapeOf(net);
        const Complex lg = executePlan(net, lineGraphPlan(shape, 3, rng.next())).value;
        const Complex st = executePlan(net, stochasticPlan(shape, 0, rng.next())).value;
        CHECK(std::abs(lg - st) <= 1e-9 * std::max(1.0, std::abs(lg)) + 1e-10);
    }
}

TEST_CASE("orderings serialize and parse") {
    const EliminationOrdering ord{{3, 0, 2, 1}};
    const std::string text = serializeOrdering(ord);
    CHECK(text == "3 0 2 1");
    CHECK(parseOrdering(text, 4).order == ord.order);
    CHECK_THROWS_AS(static_cast<void>(parseOrdering("0 1", 3)), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(parseOrdering("0 1 1", 3)), std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(parseOrdering("0 1 5", 3)), std::invalid_argument);
}

TEST_CASE("cost correlates with width on a small QAOA suite") {
    Rng rng(563);
    std::vector<double> widths, flops;
    for (int trial = 0; trial < 12; ++trial) {
        const int k = 3 + trial % 2;
        const MaxCutInstance inst = randomRegularGraph(k == 3 ? 10 : 9, k, rng.next());
        const QaoaParams params{1, {0.7}, {0.3}};
        Circuit c = qaoaCircuit(inst, params);
        c.setMeasurement(inst.graph.edges[0].first, MeasurementKind::Z);
        c.setMeasurement(inst.graph.edges[0].second, MeasurementKind::Z);
        const TensorNetwork net = buildNetwork(c);
        const ContractionPlan plan = lineGraphPlan(shapeOf(net), 4, rng.next());
        widths.push_back(plan.width);
        flops.push_back(static_cast<double>(executePlan(net, plan).flops));
    }
    CHECK(test::spearman(widths, flops) > 0.0);
}

}  // TEST_SUITE
