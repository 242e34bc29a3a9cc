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

#include "qtns/oracle.hpp"

#include <stdexcept>

namespace qtns {

namespace {

// Applies a 4x4 matrix to the state along qubit q's leg. The tensor entries
// of a rank-2 superoperator are exactly that matrix, row-major (out, in).
void applySingle(std::vector<Complex>& amp, int n, int q, std::span<const Complex> m) {
    const std::uint64_t stride = pow4(n - 1 - q);
    const std::uint64_t total = amp.size();
    Complex v[4];
    for (std::uint64_t base = 0; base < total; ++base) {
        // visit each 4-tuple once: skip offsets whose q-digit is nonzero
        if ((base / stride) % 4 != 0) continue;
        for (int d = 0; d < 4; ++d) v[d] = amp[base + d * stride];
        for (int r = 0; r < 4; ++r) {
            Complex acc{0.0, 0.0};
            for (int d = 0; d < 4; ++d) acc += m[static_cast<std::size_t>(r) * 4 + d] * v[d];
            amp[base + r * stride] = acc;
        }
    }
}

// 16x16 matrix over the leg pair (a, b); rank-4 superoperator entries are
// that matrix row-major with row index 4*out_a + out_b.
void applyPair(std::vector<Complex>& amp, int n, int a, int b, std::span<const Complex> m) {
    const std::uint64_t strideA = pow4(n - 1 - a);
    const std::uint64_t strideB = pow4(n - 1 - b);
    const std::uint64_t total = amp.size();
    Complex v[16];
    for (std::uint64_t base = 0; base < total; ++base) {
        if ((base / strideA) % 4 != 0 || (base / strideB) % 4 != 0) continue;
        for (int da = 0; da < 4; ++da)
            for (int db = 0; db < 4; ++db) v[4 * da + db] = amp[base + da * strideA + db * strideB];
        for (int r = 0; r < 16; ++r) {
            Complex acc{0.0, 0.0};
            for (int d = 0; d < 16; ++d) acc += m[static_cast<std::size_t>(r) * 16 + d] * v[d];
            amp[base + (r / 4) * strideA + (r % 4) * strideB] = acc;
        }
    }
}

}  // namespace

DenseState oracleSimulate(const Circuit& c) {
    if (c.numQubits <= 0) throw std::invalid_argument("circuit has no qubits");
    if (c.numQubits > kOracleMaxQubits)
        throw std::invalid_argument("oracle limited to " + std::to_string(kOracleMaxQubits) +
                                    " qubits");
    DenseState state;
    state.numQubits = c.numQubits;
    state.amp.assign(pow4(c.numQubits), Complex{0.0, 0.0});
    state.amp[0] = 1.0;  // |0...0><0...0| has every leg at digit 0

    for (const GateApplication& op : c.ops) {
        const Tensor t = gateSuperoperator(op, c);
        if (op.arity() == 1) {
            applySingle(state.amp, c.numQubits, op.qubit0, t.entries());
        } else {
            applyPair(state.amp, c.numQubits, op.qubit0, op.qubit1, t.entries());
        }
    }
    return state;
}

Complex oracleExpectationValue(const Circuit& c) {
    const DenseState state = oracleSimulate(c);
    // fold the measurement vector of the last qubit repeatedly; its leg is
    // the fastest-varying digit of the remaining vector
    std::vector<Complex> cur = state.amp;
    for (int q = c.numQubits - 1; q >= 0; --q) {
        const Tensor m = makeMeasurementTensor(c.measurements[static_cast<std::size_t>(q)]);
        const std::span<const Complex> mv = m.entries();
        std::vector<Complex> next(cur.size() / 4);
        for (std::size_t i = 0; i < next.size(); ++i) {
            Complex acc{0.0, 0.0};
            for (int d = 0; d < 4; ++d) acc += mv[static_cast<std::size_t>(d)] * cur[i * 4 + d];
            next[i] = acc;
        }
        cur = std::move(next);
    }
    return cur[0];
}

double oracleExpectation(const Circuit& c) { return oracleExpectationValue(c).real(); }

std::vector<double> oracleDistribution(const DenseState& state) {
    const int n = state.numQubits;
    std::vector<double> p(std::size_t{1} << n);
    for (std::size_t s = 0; s < p.size(); ++s) {
        std::uint64_t off = 0;
        for (int q = 0; q < n; ++q) {
            const int bit = static_cast<int>((s >> q) & 1u);
            off = off * 4 + static_cast<std::uint64_t>(3 * bit);
        }
        p[s] = state.amp[off].real();
    }
    return p;
}

}  // namespace qtns
