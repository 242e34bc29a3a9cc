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

#include "qtns/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtns {

SqMatrix::SqMatrix(int dim, std::vector<Complex> entries) : dim_(dim), m_(std::move(entries)) {
    if (m_.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("matrix entry count does not match dimension");
}

SqMatrix SqMatrix::identity(int dim) {
    SqMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

SqMatrix SqMatrix::dagger() const {
    SqMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

SqMatrix SqMatrix::operator*(const SqMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
    SqMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            const Complex v = at(r, k);
            for (int c = 0; c < dim_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

bool SqMatrix::isUnitary(double tol) const {
    const SqMatrix p = dagger() * (*this);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) {
            const Complex want = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(p.at(r, c) - want) > tol) return false;
        }
    return true;
}

void validateKrausChannel(const KrausChannel& ch, double tol) {
    if (ch.operators.empty()) throw std::invalid_argument("empty Kraus channel");
    const int dim = ch.dim();
    if (dim != 2 && dim != 4) throw std::invalid_argument("Kraus operators must be 2x2 or 4x4");
    SqMatrix sum(dim);
    for (const auto& e : ch.operators) {
        if (e.dim() != dim) throw std::invalid_argument("mixed Kraus operator dimensions");
        const SqMatrix term = e.dagger() * e;
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c) sum.at(r, c) += term.at(r, c);
    }
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const Complex want = r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(sum.at(r, c) - want) > tol)
                throw std::invalid_argument("Kraus completeness relation violated");
        }
}

KrausChannel depolarizingChannel(double p) {
    if (p < 0.0 || p > 4.0 / 3.0) throw std::invalid_argument("depolarizing strength out of range");
    KrausChannel ch;
    auto scaled = [](const SqMatrix& m, double s) {
        SqMatrix out(m.dim());
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c) out.at(r, c) = s * m.at(r, c);
        return out;
    };
    ch.operators.push_back(scaled(SqMatrix::identity(2), std::sqrt(1.0 - 3.0 * p / 4.0)));
    ch.operators.push_back(scaled(pauliX(), std::sqrt(p / 4.0)));
    ch.operators.push_back(scaled(pauliY(), std::sqrt(p / 4.0)));
    ch.operators.push_back(scaled(pauliZ(), std::sqrt(p / 4.0)));
    return ch;
}

KrausChannel phaseDampingChannel(double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("damping strength out of range");
    KrausChannel ch;
    SqMatrix e0(2), e1(2);
    e0.at(0, 0) = 1.0;
    e0.at(1, 1) = std::sqrt(1.0 - lambda);
    e1.at(1, 1) = std::sqrt(lambda);
    ch.operators.push_back(e0);
    ch.operators.push_back(e1);
    return ch;
}

namespace {

// Accumulates u (x) conj(u) into the per-qubit-leg layout. For 2x2 inputs
// the tensor is T[2r+c][2r'+c'] = u[r][r'] conj(u[c][c']). For 4x4 inputs,
// Hilbert row R = 2 r_a + r_b splits over the two qubits and the legs become
// (out_a, out_b, in_a, in_b) with out_a = 2 r_a + c_a and so on; this layout
// is pinned by the reference CNOT tensor.
void accumulateSuperoperator(const SqMatrix& e, std::vector<Complex>& entries) {
    if (e.dim() == 2) {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                for (int rp = 0; rp < 2; ++rp)
                    for (int cp = 0; cp < 2; ++cp)
                        entries[static_cast<std::size_t>(2 * r + c) * 4 + (2 * rp + cp)] +=
                            e.at(r, rp) * std::conj(e.at(c, cp));
        return;
    }
    for (int ra = 0; ra < 2; ++ra)
        for (int rb = 0; rb < 2; ++rb)
            for (int ca = 0; ca < 2; ++ca)
                for (int cb = 0; cb < 2; ++cb)
                    for (int rap = 0; rap < 2; ++rap)
                        for (int rbp = 0; rbp < 2; ++rbp)
                            for (int cap = 0; cap < 2; ++cap)
                                for (int cbp = 0; cbp < 2; ++cbp) {
                                    const int outA = 2 * ra + ca, outB = 2 * rb + cb;
                                    const int inA = 2 * rap + cap, inB = 2 * rbp + cbp;
                                    const std::size_t off =
                                        ((static_cast<std::size_t>(outA) * 4 + outB) * 4 + inA) * 4 +
                                        inB;
                                    entries[off] += e.at(2 * ra + rb, 2 * rap + rbp) *
                                                    std::conj(e.at(2 * ca + cb, 2 * cap + cbp));
                                }
}

Tensor superoperatorTensor(const SqMatrix& e) {
    const int rank = e.dim() == 2 ? 2 : 4;
    std::vector<Complex> entries(pow4(rank));
    accumulateSuperoperator(e, entries);
    std::vector<WireId> labels(rank);
    for (int i = 0; i < rank; ++i) labels[i] = i;
    return Tensor(std::move(labels), std::move(entries));
}

}  // namespace

Tensor makeSuperoperator(const SqMatrix& u) {
    if (u.dim() != 2 && u.dim() != 4)
        throw std::invalid_argument("superoperator input must be 2x2 or 4x4");
    if (!u.isUnitary()) throw std::invalid_argument("matrix is not unitary");
    return superoperatorTensor(u);
}

Tensor makeKrausSuperoperator(const KrausChannel& ch) {
    validateKrausChannel(ch);
    const int rank = ch.dim() == 2 ? 2 : 4;
    std::vector<Complex> entries(pow4(rank));
    for (const auto& e : ch.operators) accumulateSuperoperator(e, entries);
    std::vector<WireId> labels(rank);
    for (int i = 0; i < rank; ++i) labels[i] = i;
    return Tensor(std::move(labels), std::move(entries));
}

Tensor makeInputTensor() {
    return Tensor({0}, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}});
}

Tensor makeMeasurementTensor(MeasurementKind kind) {
    std::vector<Complex> v(4, Complex{0.0, 0.0});
    switch (kind) {
        case MeasurementKind::Trace: v[0] = 1.0; v[3] = 1.0; break;
        case MeasurementKind::X: v[1] = 1.0; v[2] = 1.0; break;
        case MeasurementKind::Y: v[1] = Complex{0.0, 1.0}; v[2] = Complex{0.0, -1.0}; break;
        case MeasurementKind::Z: v[0] = 1.0; v[3] = -1.0; break;
        case MeasurementKind::Proj0: v[0] = 1.0; break;
        case MeasurementKind::Proj1: v[3] = 1.0; break;
    }
    return Tensor({0}, std::move(v));
}

SqMatrix pauliX() { return SqMatrix(2, {0, 1, 1, 0}); }

SqMatrix pauliY() {
    return SqMatrix(2, {0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0});
}

SqMatrix pauliZ() { return SqMatrix(2, {1, 0, 0, -1}); }

SqMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return SqMatrix(2, {s, s, s, -s});
}

SqMatrix phaseS() { return SqMatrix(2, {1, 0, 0, Complex{0.0, 1.0}}); }

SqMatrix phaseT() {
    return SqMatrix(2, {1, 0, 0, std::polar(1.0, std::numbers::pi / 4.0)});
}

SqMatrix rotationX(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return SqMatrix(2, {c, Complex{0.0, -s}, Complex{0.0, -s}, c});
}

SqMatrix rotationY(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return SqMatrix(2, {c, -s, s, c});
}

SqMatrix rotationZ(double theta) {
    return SqMatrix(2, {std::polar(1.0, -theta / 2.0), 0, 0, std::polar(1.0, theta / 2.0)});
}

SqMatrix cnot() {
    SqMatrix m(4);
    m.at(0, 0) = m.at(1, 1) = m.at(2, 3) = m.at(3, 2) = 1.0;
    return m;
}

SqMatrix cz() {
    SqMatrix m = SqMatrix::identity(4);
    m.at(3, 3) = -1.0;
    return m;
}

SqMatrix swapGate() {
    SqMatrix m(4);
    m.at(0, 0) = m.at(1, 2) = m.at(2, 1) = m.at(3, 3) = 1.0;
    return m;
}

SqMatrix zzPhase(double gamma) {
    SqMatrix m(4);
    const Complex ph = std::polar(1.0, -gamma);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = ph;
    m.at(2, 2) = ph;
    m.at(3, 3) = 1.0;
    return m;
}

}  // namespace qtns
