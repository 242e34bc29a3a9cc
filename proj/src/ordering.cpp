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

#include "qtns/ordering.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "qtns/rng.hpp"

namespace qtns {

namespace {

std::uint64_t satPow4(int e) {
    return e >= 32 ? ~std::uint64_t{0} : std::uint64_t{1} << (2 * e);
}

/// Mutable elimination state over a bit-matrix adjacency.
class EliminationSim {
public:
    explicit EliminationSim(const SimpleGraph& g)
        : n_(g.n), words_((g.n + 63) / 64), bits_(static_cast<std::size_t>(g.n) * words_, 0),
          alive_(static_cast<std::size_t>(g.n), true), degree_(g.degrees()) {
        for (const auto& [u, v] : g.edges) {
            setBit(u, v);
            setBit(v, u);
        }
    }

    bool adjacent(int u, int v) const {
        return (row(u)[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1u;
    }

    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
    bool alive(int v) const { return alive_[static_cast<std::size_t>(v)]; }

    std::vector<int> aliveNeighbors(int v) const {
        std::vector<int> out;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bitsLeft = r[w];
            while (bitsLeft) {
                const int b = std::countr_zero(bitsLeft);
                bitsLeft &= bitsLeft - 1;
                out.push_back(w * 64 + b);
            }
        }
        return out;
    }

    /// Fill edges needed to make v's alive neighborhood a clique.
    int fillCount(int v) const {
        const std::vector<int> nb = aliveNeighbors(v);
        int fill = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!adjacent(nb[i], nb[j])) ++fill;
        return fill;
    }

    /// Removes v, connecting its alive neighbors pairwise. Returns the
    /// neighborhood size at elimination (clique size - 1) and appends every
    /// vertex whose fill count may have changed to `dirty`.
    int eliminate(int v, std::vector<int>* dirty) {
        const std::vector<int> nb = aliveNeighbors(v);
        for (int u : nb) {
            clearBit(u, v);
            --degree_[static_cast<std::size_t>(u)];
            if (dirty) dirty->push_back(u);
        }
        alive_[static_cast<std::size_t>(v)] = false;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const int a = nb[i], b = nb[j];
                if (adjacent(a, b)) continue;
                setBit(a, b);
                setBit(b, a);
                ++degree_[static_cast<std::size_t>(a)];
                ++degree_[static_cast<std::size_t>(b)];
                if (dirty) {
                    // third parties adjacent to both ends see their fill drop
                    for (int w = 0; w < words_; ++w) {
                        std::uint64_t common = row(a)[static_cast<std::size_t>(w)] &
                                               row(b)[static_cast<std::size_t>(w)];
                        while (common) {
                            const int bit = std::countr_zero(common);
                            common &= common - 1;
                            dirty->push_back(w * 64 + bit);
                        }
                    }
                }
            }
        }
        return static_cast<int>(nb.size());
    }

private:
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    std::uint64_t* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void setBit(int u, int v) { row(u)[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64); }
    void clearBit(int u, int v) { row(u)[static_cast<std::size_t>(v / 64)] &= ~(std::uint64_t{1} << (v % 64)); }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
    std::vector<bool> alive_;
    std::vector<int> degree_;
};

struct OrderingQuality {
    int width = 0;
    std::uint64_t flops = 0;  // sum of 4^(clique size) per elimination step

    bool betterThan(const OrderingQuality& other) const {
        if (width != other.width) return width < other.width;
        return flops < other.flops;
    }
};

OrderingQuality measureOrdering(const SimpleGraph& g, std::span<const int> order) {
    EliminationSim sim(g);
    OrderingQuality q;
    for (int v : order) {
        const int cliqueMinusOne = sim.eliminate(v, nullptr);
        q.width = std::max(q.width, cliqueMinusOne);
        std::uint64_t step = satPow4(cliqueMinusOne + 1);
        q.flops = q.flops + step < q.flops ? ~std::uint64_t{0} : q.flops + step;
    }
    return q;
}

/// One greedy pass. perturb widens the candidate pool now and then so that
/// restarts explore beyond strict min-fill choices.
EliminationOrdering greedyMinFill(const SimpleGraph& g, Rng& rng, bool perturb) {
    const int n = g.n;
    EliminationSim sim(g);
    std::vector<int> fill(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) fill[static_cast<std::size_t>(v)] = sim.fillCount(v);

    EliminationOrdering ord;
    ord.order.reserve(static_cast<std::size_t>(n));
    std::vector<int> candidates, dirty;
    for (int step = 0; step < n; ++step) {
        int bestFill = -1, bestDeg = -1;
        for (int v = 0; v < n; ++v) {
            if (!sim.alive(v)) continue;
            const int f = fill[static_cast<std::size_t>(v)];
            const int d = sim.degree(v);
            if (bestFill < 0 || f < bestFill || (f == bestFill && d < bestDeg)) {
                bestFill = f;
                bestDeg = d;
            }
        }
        candidates.clear();
        const bool widen = perturb && rng.real() < 0.15;
        for (int v = 0; v < n; ++v) {
            if (!sim.alive(v)) continue;
            const int f = fill[static_cast<std::size_t>(v)];
            if (widen ? f <= bestFill + 1
                      : (f == bestFill && sim.degree(v) == bestDeg))
                candidates.push_back(v);
        }
        const int pick = candidates[rng.below(candidates.size())];
        ord.order.push_back(pick);

        dirty.clear();
        sim.eliminate(pick, &dirty);
        std::sort(dirty.begin(), dirty.end());
        dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
        for (int v : dirty)
            if (sim.alive(v)) fill[static_cast<std::size_t>(v)] = sim.fillCount(v);
    }
    return ord;
}

bool lexLess(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

constexpr std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

EliminationOrdering minFillOrdering(const SimpleGraph& g, std::uint64_t seed) {
    if (g.n == 0) return {};
    Rng rng(seed);
    return greedyMinFill(g, rng, false);
}

EliminationOrdering anytimeOrdering(const SimpleGraph& g, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("restart budget must be positive");
    if (g.n == 0) return {};

    // with a budget covering the whole search space, enumerate it instead:
    // the anytime loop run to completion is an exact search
    if (g.n <= 8 && static_cast<std::uint64_t>(restarts) >= factorial(g.n)) {
        std::vector<int> perm(static_cast<std::size_t>(g.n));
        std::iota(perm.begin(), perm.end(), 0);
        EliminationOrdering best{perm};
        OrderingQuality bestQ = measureOrdering(g, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            const OrderingQuality q = measureOrdering(g, perm);
            if (q.betterThan(bestQ)) {
                bestQ = q;
                best.order = perm;
            }
        }
        return best;
    }

    EliminationOrdering best;
    OrderingQuality bestQ;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(mixSeed(seed, static_cast<std::uint64_t>(r)));
        EliminationOrdering cand =
            r == 0 ? minFillOrdering(g, seed) : greedyMinFill(g, rng, true);
        const OrderingQuality q = measureOrdering(g, cand.order);
        if (r == 0 || q.betterThan(bestQ) ||
            (q.width == bestQ.width && q.flops == bestQ.flops && lexLess(cand.order, best.order))) {
            best = std::move(cand);
            bestQ = q;
        }
    }
    return best;
}

EliminationOrdering anytimeOrderingSeconds(const SimpleGraph& g, double budgetSeconds,
                                           std::uint64_t seed) {
    if (budgetSeconds <= 0.0) throw std::invalid_argument("time budget must be positive");
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budgetSeconds));
    EliminationOrdering best;
    OrderingQuality bestQ;
    int r = 0;
    do {
        Rng rng(mixSeed(seed, static_cast<std::uint64_t>(r)));
        EliminationOrdering cand =
            r == 0 ? minFillOrdering(g, seed) : greedyMinFill(g, rng, true);
        const OrderingQuality q = measureOrdering(g, cand.order);
        if (r == 0 || q.betterThan(bestQ)) {
            best = std::move(cand);
            bestQ = q;
        }
        ++r;
    } while (std::chrono::steady_clock::now() < deadline);
    return best;
}

int treewidthUpperBound(const EliminationOrdering& ord, const SimpleGraph& g) {
    if (static_cast<int>(ord.order.size()) != g.n)
        throw std::invalid_argument("ordering does not cover the graph");
    return measureOrdering(g, ord.order).width;
}

TreeDecomposition decompositionFromOrdering(const SimpleGraph& g, const EliminationOrdering& ord) {
    if (static_cast<int>(ord.order.size()) != g.n)
        throw std::invalid_argument("ordering does not cover the graph");
    EliminationSim sim(g);
    std::vector<int> position(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) position[static_cast<std::size_t>(ord.order[i])] = i;

    TreeDecomposition td;
    td.bags.resize(ord.order.size());
    for (int i = 0; i < g.n; ++i) {
        const int v = ord.order[static_cast<std::size_t>(i)];
        const std::vector<int> nb = sim.aliveNeighbors(v);
        auto& bag = td.bags[static_cast<std::size_t>(i)];
        bag.push_back(v);
        bag.insert(bag.end(), nb.begin(), nb.end());
        if (!nb.empty()) {
            // attach below the first of the neighbors to be eliminated
            const int next = *std::min_element(nb.begin(), nb.end(), [&](int a, int b) {
                return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
            });
            td.treeEdges.emplace_back(i, position[static_cast<std::size_t>(next)]);
        } else if (i + 1 < g.n) {
            td.treeEdges.emplace_back(i, i + 1);  // isolated remainder
        }
        sim.eliminate(v, nullptr);
    }
    return td;
}

ContractionPlan planFromOrdering(const NetworkShape& shape, const EliminationOrdering& ord) {
    const int wireCount = static_cast<int>(shape.wires.size());
    if (static_cast<int>(ord.order.size()) != wireCount)
        throw std::invalid_argument("ordering size does not match the network's wire count");
    ContractionPlan plan;
    plan.order.reserve(ord.order.size());
    for (int v : ord.order) plan.order.push_back(static_cast<WireId>(v));
    const PlanStats stats = simulatePlan(shape, plan.order);  // also validates permutation
    plan.predictedFlops = stats.flops;
    plan.predictedPeakRank = stats.peakRank;
    plan.width = treewidthUpperBound(ord, lineGraph(shape.wires));
    return plan;
}

ContractionPlan lineGraphPlan(const NetworkShape& shape, int restarts, std::uint64_t seed) {
    const SimpleGraph lg = lineGraph(shape.wires);
    const EliminationOrdering ord = anytimeOrdering(lg, restarts, seed);
    return planFromOrdering(shape, ord);
}

ContractionPlan stochasticPlan(const NetworkShape& shape, int maxRejections, std::uint64_t seed) {
    const int wireCount = static_cast<int>(shape.wires.size());
    if (maxRejections <= 0) maxRejections = 2 * wireCount;

    Rng rng(seed);
    std::vector<int> rank = shape.ranks;
    std::vector<NodeId> parent(shape.ranks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](NodeId x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    // alive incident lists, as in the executor
    std::vector<std::vector<WireId>> incident(shape.ranks.size());
    for (int w = 0; w < wireCount; ++w) {
        incident[static_cast<std::size_t>(shape.wires[static_cast<std::size_t>(w)].first)]
            .push_back(w);
        incident[static_cast<std::size_t>(shape.wires[static_cast<std::size_t>(w)].second)]
            .push_back(w);
    }
    for (auto& l : incident) std::sort(l.begin(), l.end());

    std::vector<WireId> aliveWires(static_cast<std::size_t>(wireCount));
    std::iota(aliveWires.begin(), aliveWires.end(), 0);

    ContractionPlan plan;
    int threshold = -1;
    int rejections = 0;
    int peakRank = 0;
    for (int r : rank) peakRank = std::max(peakRank, r);

    while (!aliveWires.empty()) {
        const std::size_t pickIdx = static_cast<std::size_t>(rng.below(aliveWires.size()));
        const WireId w = aliveWires[pickIdx];
        const NodeId a = find(shape.wires[static_cast<std::size_t>(w)].first);
        const NodeId b = find(shape.wires[static_cast<std::size_t>(w)].second);

        auto& la = incident[static_cast<std::size_t>(a)];
        auto& lb = incident[static_cast<std::size_t>(b)];
        std::vector<WireId> shared;
        std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(),
                              std::back_inserter(shared));
        const int ra = rank[static_cast<std::size_t>(a)];
        const int rb = rank[static_cast<std::size_t>(b)];
        const int rc = ra + rb - 2 * static_cast<int>(shared.size());
        const int cost = rc - std::max(ra, rb);

        if (cost <= threshold) {
            plan.order.push_back(w);
            std::vector<WireId> rest;
            std::set_symmetric_difference(la.begin(), la.end(), lb.begin(), lb.end(),
                                          std::back_inserter(rest));
            la = std::move(rest);
            lb.clear();
            parent[static_cast<std::size_t>(b)] = a;
            rank[static_cast<std::size_t>(a)] = rc;
            peakRank = std::max(peakRank, rc);
            // drop the contracted wires from the alive pool
            std::vector<bool> gone(shape.wires.size(), false);
            for (WireId s : shared) gone[static_cast<std::size_t>(s)] = true;
            aliveWires.erase(std::remove_if(aliveWires.begin(), aliveWires.end(),
                                            [&](WireId x) { return gone[static_cast<std::size_t>(x)]; }),
                             aliveWires.end());
            rejections = 0;
            threshold = -1;
        } else {
            ++rejections;
            if (rejections > maxRejections) {
                ++threshold;
                rejections = 0;
            }
        }
    }

    // eliminated wires that earlier merges consumed still belong in the
    // plan's coverage; append them (the executor will skip them)
    std::vector<bool> inPlan(shape.wires.size(), false);
    for (WireId w : plan.order) inPlan[static_cast<std::size_t>(w)] = true;
    for (int w = 0; w < wireCount; ++w)
        if (!inPlan[static_cast<std::size_t>(w)]) plan.order.push_back(w);

    const PlanStats stats = simulatePlan(shape, plan.order);
    plan.predictedFlops = stats.flops;
    plan.predictedPeakRank = stats.peakRank;
    plan.width = stats.peakRank - 1;
    return plan;
}

}  // namespace qtns
