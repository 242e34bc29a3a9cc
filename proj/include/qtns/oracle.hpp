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

#ifndef QTNS_ORACLE_HPP
#define QTNS_ORACLE_HPP

#include <vector>

#include "qtns/circuit.hpp"

namespace qtns {

// Brute-force dense simulator over the full 4^n-dimensional vectorized
// density-matrix space. Ground truth for the contraction engine: it shares
// the gate tensor constants with circuit construction but applies them with
// its own dense matrix-vector engine and never touches the network or
// planner code.

/// Vectorized density matrix: 4^n complex entries, qubit 0's leg varying
/// slowest, each leg ordered |r><c| -> 2r+c.
struct DenseState {
    int numQubits = 0;
    std::vector<Complex> amp;
};

constexpr int kOracleMaxQubits = 12;

/// Propagates |0...0><0...0| through the circuit's gate superoperators.
DenseState oracleSimulate(const Circuit& c);

/// Contracts the state against the circuit's per-qubit measurement vectors.
/// Measurement operators here are Hermitian, so the value is real.
double oracleExpectation(const Circuit& c);

/// Same, keeping the (diagnostic) imaginary part.
Complex oracleExpectationValue(const Circuit& c);

/// Probabilities of the 2^n computational basis strings: the diagonal of
/// the devectorized density matrix. Bit 0 of a string index is qubit 0's
/// value, taken from the most significant base-4 digit.
std::vector<double> oracleDistribution(const DenseState& state);

}  // namespace qtns

#endif
