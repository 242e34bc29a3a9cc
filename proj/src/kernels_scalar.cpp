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

#include "qtns/kernels.hpp"

namespace qtns {

// Reference kernel. Plain ascending-k accumulation; the SIMD backends are
// equivalence-tested against this.
void contractKernelScalar(const Complex* a, const Complex* bt, Complex* c,
                          std::size_t n, std::size_t k,
                          std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
        const std::size_t i = e / n;
        const std::size_t j = e % n;
        const Complex* arow = a + i * k;
        const Complex* brow = bt + j * k;
        double re = 0.0, im = 0.0;
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double ar = arow[kk].real(), ai = arow[kk].imag();
            const double br = brow[kk].real(), bi = brow[kk].imag();
            re += ar * br - ai * bi;
            im += ar * bi + ai * br;
        }
        c[e] = Complex{re, im};
    }
}

}  // namespace qtns
