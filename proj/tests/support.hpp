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

// Shared test utilities: random tensors/circuits/graphs, independent
// brute-force oracles, and small statistics helpers. Everything here is
// test-only and stays independent of the code paths it checks.

#ifndef QTNS_TESTS_SUPPORT_HPP
#define QTNS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "qtns/circuit.hpp"
#include "qtns/graph.hpp"
#include "qtns/rng.hpp"
#include "qtns/tensor.hpp"

namespace qtns::test {

inline Tensor randomTensor(std::vector<WireId> labels, Rng& rng) {
    std::vector<Complex> entries(pow4(static_cast<int>(labels.size())));
    for (auto& e : entries) e = Complex{rng.realIn(-1.0, 1.0), rng.realIn(-1.0, 1.0)};
    return Tensor(std::move(labels), std::move(entries));
}

/// Random n-qubit circuit over the full built-in gate set; when withKraus is
/// set, one depolarizing node of random strength is inserted at a random
/// position. Measurements are drawn from all six kinds.
inline Circuit randomCircuit(int numQubits, int maxGates, bool withKraus, bool randomMeasurements,
                             Rng& rng) {
    Circuit c(numQubits);
    const GateKind oneQ[] = {GateKind::X,  GateKind::Y,  GateKind::Z,  GateKind::H, GateKind::S,
                             GateKind::T,  GateKind::Rx, GateKind::Ry, GateKind::Rz};
    const GateKind twoQ[] = {GateKind::Cnot, GateKind::Cz, GateKind::Swap, GateKind::Zz};

    const int gateCount = rng.intIn(1, maxGates);
    for (int i = 0; i < gateCount; ++i) {
        if (numQubits >= 2 && rng.real() < 0.4) {
            const GateKind kind = twoQ[rng.below(4)];
            const int q0 = rng.intIn(0, numQubits - 1);
            int q1 = rng.intIn(0, numQubits - 2);
            if (q1 >= q0) ++q1;
            if (gateParamCount(kind) == 1) {
                c.addGate(kind, rng.realIn(0.0, 6.283185307179586), q0, q1);
            } else {
                c.addGate(kind, q0, q1);
            }
        } else {
            const GateKind kind = oneQ[rng.below(9)];
            const int q = rng.intIn(0, numQubits - 1);
            if (gateParamCount(kind) == 1) {
                c.addGate(kind, rng.realIn(0.0, 6.283185307179586), q);
            } else {
                c.addGate(kind, q);
            }
        }
    }
    if (withKraus) {
        const int channel = c.addChannel(depolarizingChannel(rng.realIn(0.0, 1.0)));
        GateApplication node;
        node.kind = GateKind::Kraus;
        node.qubit0 = rng.intIn(0, numQubits - 1);
        node.defIndex = channel;
        const std::size_t pos = rng.below(c.ops.size() + 1);
        c.ops.insert(c.ops.begin() + static_cast<std::ptrdiff_t>(pos), node);
    }
    if (randomMeasurements) {
        const MeasurementKind kinds[] = {MeasurementKind::Trace, MeasurementKind::X,
                                         MeasurementKind::Y,     MeasurementKind::Z,
                                         MeasurementKind::Proj0, MeasurementKind::Proj1};
        for (int q = 0; q < numQubits; ++q) c.setMeasurement(q, kinds[rng.below(6)]);
    }
    return c;
}

/// Uniformly random connected simple graph (retries until connected).
inline SimpleGraph randomConnectedGraph(int n, Rng& rng) {
    for (;;) {
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.real() < 0.5) g.addEdge(u, v);
        if (g.n > 0 && g.edgeCount() >= n - 1 && g.isConnected()) return g;
    }
}

/// Independent induced-width computation (set-based, test-only).
inline int orderingWidthRef(const SimpleGraph& g, const std::vector<int>& order) {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    int width = 0;
    for (int v : order) {
        const std::vector<int> nb(adj[static_cast<std::size_t>(v)].begin(),
                                  adj[static_cast<std::size_t>(v)].end());
        width = std::max(width, static_cast<int>(nb.size()));
        for (int u : nb) adj[static_cast<std::size_t>(u)].erase(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                adj[static_cast<std::size_t>(nb[i])].insert(nb[j]);
                adj[static_cast<std::size_t>(nb[j])].insert(nb[i]);
            }
        adj[static_cast<std::size_t>(v)].clear();
    }
    return width;
}

/// Exact treewidth by brute force over every elimination ordering (n <= 8).
inline int treewidthBruteForce(const SimpleGraph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = g.n;
    do {
        best = std::min(best, orderingWidthRef(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    auto ranksOf = [n](const std::vector<double>& v) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> rank(n);
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
            const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
            for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
            i = j + 1;
        }
        return rank;
    };
    const std::vector<double> rx = ranksOf(x), ry = ranksOf(y);
    const double mean = (static_cast<double>(n) + 1.0) / 2.0;
    double num = 0.0, dx = 0.0, dy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (rx[i] - mean) * (ry[i] - mean);
        dx += (rx[i] - mean) * (rx[i] - mean);
        dy += (ry[i] - mean) * (ry[i] - mean);
    }
    return num / std::sqrt(dx * dy);
}

}  // namespace qtns::test

#endif
