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

#include "qtns/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qtns/rng.hpp"

namespace qtns {

void validateInstance(const MaxCutInstance& inst) {
    const SimpleGraph& g = inst.graph;
    if (g.n <= 0) throw std::invalid_argument("instance has no vertices");
    if (!g.isConnected()) throw std::invalid_argument("instance graph is not connected");
    // SimpleGraph construction already rejects loops and parallel edges
    if (inst.regularity > 0) {
        for (int d : g.degrees())
            if (d != inst.regularity)
                throw std::invalid_argument("graph is not " + std::to_string(inst.regularity) +
                                            "-regular");
    }
}

MaxCutInstance randomRegularGraph(int n, int k, std::uint64_t seed) {
    if (k < 1 || k >= n) throw std::invalid_argument("regularity must satisfy 1 <= k < n");
    if ((static_cast<long long>(n) * k) % 2 != 0)
        throw std::invalid_argument("n*k must be even");

    constexpr int kMaxAttempts = 5000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(mixSeed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * k);
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < k; ++j) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);

        SimpleGraph g(n);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.hasEdge(u, v)) {
                ok = false;
            } else {
                g.addEdge(u, v);
            }
        }
        if (!ok || !g.isConnected()) continue;
        MaxCutInstance inst{std::move(g), k};
        validateInstance(inst);
        return inst;
    }
    throw std::runtime_error("random regular graph sampling failed after " +
                             std::to_string(kMaxAttempts) + " attempts");
}

MaxCutInstance ringPlusChords(int n, std::uint64_t seed) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("need an even ring of at least 6 vertices");

    constexpr int kMaxAttempts = 5000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng(mixSeed(seed, 0x52696e67ull + static_cast<std::uint64_t>(attempt)));
        SimpleGraph g(n);
        for (int v = 0; v < n; ++v) g.addEdge(v, (v + 1) % n);

        std::vector<int> open(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) open[static_cast<std::size_t>(v)] = v;
        bool stuck = false;
        while (open.size() > 1) {
            // try a few random pairs before declaring this attempt stuck
            bool added = false;
            for (int tries = 0; tries < 64 && !added; ++tries) {
                const std::size_t i = static_cast<std::size_t>(rng.below(open.size()));
                std::size_t j = static_cast<std::size_t>(rng.below(open.size() - 1));
                if (j >= i) ++j;
                const int u = open[i], v = open[j];
                if (g.hasEdge(u, v)) continue;
                g.addEdge(u, v);
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
                added = true;
            }
            if (!added) {
                stuck = true;
                break;
            }
        }
        if (stuck || !open.empty()) continue;
        MaxCutInstance inst{std::move(g), 3};
        validateInstance(inst);
        return inst;
    }
    throw std::runtime_error("ring-plus-chords construction failed");
}

Circuit qaoaCircuit(const MaxCutInstance& inst, const QaoaParams& params) {
    if (params.p <= 0) throw std::invalid_argument("p must be positive");
    if (static_cast<int>(params.gammas.size()) != params.p ||
        static_cast<int>(params.betas.size()) != params.p)
        throw std::invalid_argument("angle vectors must have length p");
    validateInstance(inst);

    Circuit c(inst.graph.n);
    for (int q = 0; q < inst.graph.n; ++q) c.addGate(GateKind::H, q);
    for (int round = 0; round < params.p; ++round) {
        const double gamma = params.gammas[static_cast<std::size_t>(round)];
        const double beta = params.betas[static_cast<std::size_t>(round)];
        for (const auto& [u, v] : inst.graph.edges) c.addGate(GateKind::Zz, gamma, u, v);
        for (int q = 0; q < inst.graph.n; ++q) c.addGate(GateKind::Rx, 2.0 * beta, q);
    }
    return c;
}

double expectationOfCut(const MaxCutInstance& inst, const QaoaParams& params,
                        const PlannerConfig& planner, const ExecConfig& exec) {
    Circuit c = qaoaCircuit(inst, params);
    ContractionPlan plan;  // shared: the network graph is measurement-independent
    bool planned = false;
    double total = 0.0;
    for (const auto& [u, v] : inst.graph.edges) {
        std::fill(c.measurements.begin(), c.measurements.end(), MeasurementKind::Trace);
        c.setMeasurement(u, MeasurementKind::Z);
        c.setMeasurement(v, MeasurementKind::Z);
        const TensorNetwork net = buildNetwork(c);
        if (!planned) {
            plan = makePlan(shapeOf(net), planner);
            planned = true;
        }
        const ExecutionResult r = executePlan(net, plan, exec);
        total += 0.5 * (1.0 - r.value.real());
    }
    return total;
}

int cutValue(const MaxCutInstance& inst, const std::vector<int>& bits) {
    if (static_cast<int>(bits.size()) != inst.graph.n)
        throw std::invalid_argument("coloring length does not match vertex count");
    int cut = 0;
    for (const auto& [u, v] : inst.graph.edges)
        if (bits[static_cast<std::size_t>(u)] != bits[static_cast<std::size_t>(v)]) ++cut;
    return cut;
}

int maxCutBruteForce(const MaxCutInstance& inst) {
    const int n = inst.graph.n;
    if (n > 20) throw std::invalid_argument("brute-force Max-Cut limited to 20 vertices");
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int cut = 0;
        for (const auto& [u, v] : inst.graph.edges)
            cut += static_cast<int>(((mask >> u) ^ (mask >> v)) & 1u);
        best = std::max(best, cut);
    }
    return best;
}

AnswerString estimateAnswerString(const Circuit& c, const PlannerConfig& planner,
                                  std::uint64_t seed, const ExecConfig& exec) {
    const int n = c.numQubits;
    Rng rng(seed);
    Circuit work = c;

    AnswerString res;
    ContractionPlan plan;  // shared across steps, same reasoning as above
    bool planned = false;
    double prefixProb = 1.0;
    for (int q = 0; q < n; ++q) {
        if (prefixProb < 1e-14) throw VanishingBranchError(q);
        for (int r = 0; r < n; ++r) {
            if (r < q) {
                work.setMeasurement(r, res.bits[static_cast<std::size_t>(r)] == 0
                                           ? MeasurementKind::Proj0
                                           : MeasurementKind::Proj1);
            } else if (r == q) {
                work.setMeasurement(r, MeasurementKind::Proj0);
            } else {
                work.setMeasurement(r, MeasurementKind::Trace);
            }
        }
        const TensorNetwork net = buildNetwork(work);
        if (!planned) {
            plan = makePlan(shapeOf(net), planner);
            planned = true;
        }
        const ExecutionResult r = executePlan(net, plan, exec);
        const double p0 = r.value.real() / prefixProb;

        int bit;
        if (std::abs(p0 - 0.5) <= 1e-12) {
            bit = rng.coin() ? 1 : 0;
        } else {
            bit = p0 > 0.5 ? 0 : 1;
        }
        const double chosen = bit == 0 ? p0 : 1.0 - p0;
        res.bits.push_back(bit);
        res.p0.push_back(p0);
        res.chosenProb.push_back(chosen);
        prefixProb *= chosen;
    }
    return res;
}

GridScanResult gridScanAngles(const MaxCutInstance& inst, int steps, const PlannerConfig& planner,
                              const ExecConfig& exec) {
    if (steps < 1) throw std::invalid_argument("grid needs at least one step");
    GridScanResult best;
    best.bestCut = -1.0;
    for (int gi = 0; gi < steps; ++gi) {
        for (int bi = 0; bi < steps; ++bi) {
            const double gamma = 2.0 * std::numbers::pi * gi / steps;
            const double beta = std::numbers::pi * bi / steps;
            const double cut =
                expectationOfCut(inst, {1, {gamma}, {beta}}, planner, exec);
            if (cut > best.bestCut) best = {cut, gamma, beta};
        }
    }
    return best;
}

namespace {

// Exact statevector walk shared by the harness trials: n <= ~20, amplitudes
// indexed with qubit q at bit q.
struct PureState {
    int n;
    std::vector<Complex> amp;
};

void applyUniformX(PureState& s, double beta) {
    // exp(i beta X) per qubit: [[cos b, i sin b], [i sin b, cos b]]
    const Complex c{std::cos(beta), 0.0};
    const Complex is{0.0, std::sin(beta)};
    for (int q = 0; q < s.n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        for (std::uint64_t i = 0; i < s.amp.size(); ++i) {
            if (i & bit) continue;
            const Complex a0 = s.amp[i];
            const Complex a1 = s.amp[i | bit];
            s.amp[i] = c * a0 + is * a1;
            s.amp[i | bit] = is * a0 + c * a1;
        }
    }
}

struct WalkResult {
    std::uint64_t chosenIndex = 0;
    std::vector<double> p0;
    std::vector<double> chosenProb;
};

WalkResult answerStringWalk(const std::vector<double>& p, int n, Rng& rng) {
    WalkResult res;
    std::uint64_t prefixMask = 0, prefixBits = 0;
    double prefixProb = 1.0;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        double pZero = 0.0;
        for (std::uint64_t i = 0; i < p.size(); ++i) {
            if ((i & prefixMask) != prefixBits) continue;
            if ((i & bit) == 0) pZero += p[i];
        }
        const double p0 = prefixProb > 0.0 ? pZero / prefixProb : 0.5;
        int chosen;
        if (std::abs(p0 - 0.5) <= 1e-12) {
            chosen = rng.coin() ? 1 : 0;
        } else {
            chosen = p0 > 0.5 ? 0 : 1;
        }
        const double chosenProb = chosen == 0 ? p0 : 1.0 - p0;
        res.p0.push_back(p0);
        res.chosenProb.push_back(chosenProb);
        prefixMask |= bit;
        if (chosen) prefixBits |= bit;
        prefixProb *= chosenProb;
    }
    res.chosenIndex = prefixBits;
    return res;
}

}  // namespace

HarnessResult productStateHarness(int n, int m, int p, int trials, std::uint64_t seed) {
    if (n < 1 || n > 20) throw std::invalid_argument("harness supports 1..20 qubits");
    if (m < 1 || p < 0 || trials < 1) throw std::invalid_argument("bad harness parameters");

    const std::uint64_t dim = std::uint64_t{1} << n;
    HarnessResult out;
    out.ranks.reserve(static_cast<std::size_t>(trials));
    out.l1.reserve(static_cast<std::size_t>(trials));

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(mixSeed(seed, static_cast<std::uint64_t>(trial)));

        PureState s{n, std::vector<Complex>(dim, Complex{1.0 / std::sqrt(double(dim)), 0.0})};
        for (int layer = 0; layer < p; ++layer) {
            const double gamma = rng.realIn(0.0, 2.0 * std::numbers::pi);
            const double beta = rng.realIn(0.0, std::numbers::pi);
            // dense diagonal phase layer with integer entries from {1..n*m}
            for (std::uint64_t i = 0; i < dim; ++i) {
                const int d = rng.intIn(1, n * m);
                s.amp[i] *= std::polar(1.0, gamma * d);
            }
            applyUniformX(s, beta);
        }

        std::vector<double> prob(dim);
        for (std::uint64_t i = 0; i < dim; ++i) prob[i] = std::norm(s.amp[i]);

        const WalkResult walk = answerStringWalk(prob, n, rng);

        int rank = 0;
        const double chosenP = prob[walk.chosenIndex];
        for (std::uint64_t i = 0; i < dim; ++i)
            if (prob[i] > chosenP) ++rank;

        double l1 = 0.0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            double q = 1.0;
            for (int qubit = 0; qubit < n; ++qubit) {
                const bool one = (i >> qubit) & 1u;
                q *= one ? 1.0 - walk.p0[static_cast<std::size_t>(qubit)]
                         : walk.p0[static_cast<std::size_t>(qubit)];
            }
            l1 += std::abs(q - prob[i]);
        }

        out.ranks.push_back(rank);
        out.l1.push_back(l1);
    }
    return out;
}

std::string serializeGraph(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph parseGraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("graph file is empty");
    std::istringstream first(lines[0]);
    int n = 0;
    if (!(first >> n) || n <= 0) throw std::invalid_argument("bad vertex count");
    SimpleGraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + lines[i]);
        g.addEdge(u, v);
    }
    return g;
}

}  // namespace qtns
