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

// Compiled with -mavx2 -mfma; only called after a runtime CPU probe.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "qtns/kernels.hpp"

namespace qtns {

namespace {

// Complex dot product of two interleaved re/im arrays of length k (k % 4 == 0).
// Lanes of accP hold ar*br / ai*bi pairs, lanes of accQ hold ar*bi / ai*br
// pairs; the final combine fixes the summation order per entry.
inline Complex dotAvx2(const Complex* x, const Complex* y, std::size_t k) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    __m256d accP0 = _mm256_setzero_pd(), accQ0 = _mm256_setzero_pd();
    __m256d accP1 = _mm256_setzero_pd(), accQ1 = _mm256_setzero_pd();
    for (std::size_t kk = 0; kk < k; kk += 4) {
        const __m256d xv0 = _mm256_loadu_pd(xd + 2 * kk);
        const __m256d yv0 = _mm256_loadu_pd(yd + 2 * kk);
        const __m256d xv1 = _mm256_loadu_pd(xd + 2 * kk + 4);
        const __m256d yv1 = _mm256_loadu_pd(yd + 2 * kk + 4);
        accP0 = _mm256_fmadd_pd(xv0, yv0, accP0);
        accP1 = _mm256_fmadd_pd(xv1, yv1, accP1);
        const __m256d ys0 = _mm256_permute_pd(yv0, 0x5);  // swap re/im per lane pair
        const __m256d ys1 = _mm256_permute_pd(yv1, 0x5);
        accQ0 = _mm256_fmadd_pd(xv0, ys0, accQ0);
        accQ1 = _mm256_fmadd_pd(xv1, ys1, accQ1);
    }
    alignas(32) double p[4], q[4];
    _mm256_store_pd(p, _mm256_add_pd(accP0, accP1));
    _mm256_store_pd(q, _mm256_add_pd(accQ0, accQ1));
    return Complex{(p[0] + p[2]) - (p[1] + p[3]), (q[0] + q[2]) + (q[1] + q[3])};
}

}  // namespace

void contractKernelAvx2(const Complex* a, const Complex* bt, Complex* c,
                        std::size_t n, std::size_t k,
                        std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
        const std::size_t i = e / n;
        const std::size_t j = e % n;
        c[e] = dotAvx2(a + i * k, bt + j * k, k);
    }
}

}  // namespace qtns

#endif  // x86_64
