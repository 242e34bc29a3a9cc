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

#ifndef QTNS_QAOA_HPP
#define QTNS_QAOA_HPP

#include <string>
#include <vector>

#include "qtns/simulate.hpp"

namespace qtns {

/// Max-Cut problem instance. regularity > 0 tags the graph as k-regular.
struct MaxCutInstance {
    SimpleGraph graph;
    int regularity = 0;
};

/// Throws unless the instance is simple, connected, and (when tagged)
/// k-regular.
void validateInstance(const MaxCutInstance& inst);

struct QaoaParams {
    int p = 1;
    std::vector<double> gammas;
    std::vector<double> betas;
};

/// Simple connected k-regular graph on n vertices via pairing-model
/// sampling, rejecting self-loops, multi-edges and disconnected outcomes.
/// Requires n*k even and k < n.
MaxCutInstance randomRegularGraph(int n, int k, std::uint64_t seed);

/// Ring of n vertices plus random chords between degree-2 vertices until
/// the graph is 3-regular (n even).
MaxCutInstance ringPlusChords(int n, std::uint64_t seed);

/// H on every qubit, then p rounds of ZZ(gamma_j) per edge followed by
/// Rx(2 beta_j) per qubit. Measurements are left at the Trace default.
Circuit qaoaCircuit(const MaxCutInstance& inst, const QaoaParams& params);

/// <C> = sum over edges of (1 - <Z_i Z_j>)/2; one contraction per edge,
/// all edges sharing a single plan (the network graph does not depend on
/// which edge is measured).
double expectationOfCut(const MaxCutInstance& inst, const QaoaParams& params,
                        const PlannerConfig& planner, const ExecConfig& exec = {});

/// Number of edges whose endpoints differ under the coloring.
int cutValue(const MaxCutInstance& inst, const std::vector<int>& bits);

/// Exhaustive Max-Cut (n <= 20), for validation.
int maxCutBruteForce(const MaxCutInstance& inst);

struct AnswerString {
    std::vector<int> bits;
    std::vector<double> chosenProb;  ///< conditional probability of each chosen bit
    std::vector<double> p0;          ///< conditional probability of 0 at each step
};

struct VanishingBranchError : std::runtime_error {
    explicit VanishingBranchError(int qubit)
        : std::runtime_error("vanishing branch: fixed prefix before qubit " +
                             std::to_string(qubit) + " has probability below 1e-14"),
          qubit(qubit) {}
    int qubit;
};

/// Qubit-by-qubit answer-string estimation: one full contraction per qubit
/// with PROJ0 on the current qubit, earlier qubits projected onto their
/// chosen bits, and Trace on the rest. Exact ties (|p0 - 1/2| <= 1e-12) are
/// broken uniformly at random under the seed.
AnswerString estimateAnswerString(const Circuit& c, const PlannerConfig& planner,
                                  std::uint64_t seed, const ExecConfig& exec = {});

/// p = 1 angle grid scan (utility for small instances): maximizes the cut
/// expectation over a steps x steps grid of (gamma, beta) in [0,2pi) x [0,pi).
struct GridScanResult {
    double bestCut = 0.0;
    double gamma = 0.0;
    double beta = 0.0;
};
GridScanResult gridScanAngles(const MaxCutInstance& inst, int steps, const PlannerConfig& planner,
                              const ExecConfig& exec = {});

/// Validation harness for the answer-string heuristic on QAOA-like unitaries
/// with dense random diagonal phase layers. Such circuits have no one- or
/// two-qubit gate form, so each trial runs on an exact statevector and the
/// same qubit-by-qubit estimation walk. Per trial it records the number of
/// basis states strictly more likely than the estimated string (its rank)
/// and the 1-norm distance between the exact distribution and the product
/// distribution implied by the walk's conditional probabilities.
struct HarnessResult {
    std::vector<int> ranks;
    std::vector<double> l1;
};
HarnessResult productStateHarness(int n, int m, int p, int trials, std::uint64_t seed);

/// Graph file format: line 1 is the vertex count, then one "u v" edge per
/// line, 0-indexed. Lines starting with '#' are comments.
std::string serializeGraph(const SimpleGraph& g);
SimpleGraph parseGraph(const std::string& text);

}  // namespace qtns

#endif
