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

#ifndef QTNS_GATES_HPP
#define QTNS_GATES_HPP

#include <span>
#include <string>
#include <vector>

#include "qtns/tensor.hpp"

namespace qtns {

/// Small dense complex square matrix (2x2 or 4x4 Hilbert-space operators).
class SqMatrix {
public:
    SqMatrix() = default;
    explicit SqMatrix(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}
    SqMatrix(int dim, std::vector<Complex> entries);

    int dim() const { return dim_; }
    Complex& at(int r, int c) { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }
    std::span<const Complex> entries() const { return m_; }

    static SqMatrix identity(int dim);
    SqMatrix dagger() const;
    SqMatrix operator*(const SqMatrix& rhs) const;

    bool isUnitary(double tol = 1e-10) const;

private:
    int dim_ = 0;
    std::vector<Complex> m_;
};

/// Trace-preserving channel given by Kraus operators {E_j} on one or two
/// qubits; sum_j E_j^dag E_j must equal the identity.
struct KrausChannel {
    std::vector<SqMatrix> operators;

    int dim() const { return operators.empty() ? 0 : operators.front().dim(); }
};

/// Throws unless the completeness relation holds within tol (elementwise).
void validateKrausChannel(const KrausChannel& ch, double tol = 1e-10);

KrausChannel depolarizingChannel(double p);
KrausChannel phaseDampingChannel(double lambda);

enum class MeasurementKind { Trace, X, Y, Z, Proj0, Proj1 };

/// Superoperator tensor u (x) conj(u) of a unitary, reindexed so each qubit
/// carries one dimension-4 leg under the vectorization |r><c| -> 2r+c.
/// Single-qubit gates give rank-2 tensors with legs (out, in); two-qubit
/// gates give rank-4 tensors with legs (out_a, out_b, in_a, in_b), where
/// qubit a is the gate's first qubit. Default index labels are 0..rank-1;
/// the network builder relabels them onto wires.
Tensor makeSuperoperator(const SqMatrix& u);

/// Same reindexing for sum_j E_j (x) conj(E_j); applying the result to a
/// vectorized density matrix realizes rho -> sum_j E_j rho E_j^dag.
Tensor makeKrausSuperoperator(const KrausChannel& ch);

/// Vectorized |0><0| input state: [1, 0, 0, 0].
Tensor makeInputTensor();

/// Rank-1 measurement tensor: Trace -> [1,0,0,1]; X -> [0,1,1,0];
/// Y -> [0,i,-i,0]; Z -> [1,0,0,-1]; Proj0 -> [1,0,0,0]; Proj1 -> [0,0,0,1].
Tensor makeMeasurementTensor(MeasurementKind kind);

// Built-in gate unitaries. Angles are radians; Rz(theta) = exp(-i theta Z/2)
// and friends. Zz(gamma) = exp(-i gamma (1 - Z(x)Z)/2), the native clause
// gate for Max-Cut objectives.
SqMatrix pauliX();
SqMatrix pauliY();
SqMatrix pauliZ();
SqMatrix hadamard();
SqMatrix phaseS();
SqMatrix phaseT();
SqMatrix rotationX(double theta);
SqMatrix rotationY(double theta);
SqMatrix rotationZ(double theta);
SqMatrix cnot();
SqMatrix cz();
SqMatrix swapGate();
SqMatrix zzPhase(double gamma);

}  // namespace qtns

#endif
