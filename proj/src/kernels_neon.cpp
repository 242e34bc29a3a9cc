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

#if defined(__aarch64__)

#include <arm_neon.h>

#include "qtns/kernels.hpp"

namespace qtns {

namespace {

// One complex double per 128-bit vector; same accumulator scheme as the
// AVX2 backend (k % 4 == 0).
inline Complex dotNeon(const Complex* x, const Complex* y, std::size_t k) {
    const double* xd = reinterpret_cast<const double*>(x);
    const double* yd = reinterpret_cast<const double*>(y);
    float64x2_t accP0 = vdupq_n_f64(0.0), accQ0 = vdupq_n_f64(0.0);
    float64x2_t accP1 = vdupq_n_f64(0.0), accQ1 = vdupq_n_f64(0.0);
    for (std::size_t kk = 0; kk < k; kk += 2) {
        const float64x2_t xv0 = vld1q_f64(xd + 2 * kk);
        const float64x2_t yv0 = vld1q_f64(yd + 2 * kk);
        const float64x2_t xv1 = vld1q_f64(xd + 2 * kk + 2);
        const float64x2_t yv1 = vld1q_f64(yd + 2 * kk + 2);
        accP0 = vfmaq_f64(accP0, xv0, yv0);
        accP1 = vfmaq_f64(accP1, xv1, yv1);
        accQ0 = vfmaq_f64(accQ0, xv0, vextq_f64(yv0, yv0, 1));
        accQ1 = vfmaq_f64(accQ1, xv1, vextq_f64(yv1, yv1, 1));
    }
    const float64x2_t accP = vaddq_f64(accP0, accP1);
    const float64x2_t accQ = vaddq_f64(accQ0, accQ1);
    return Complex{vgetq_lane_f64(accP, 0) - vgetq_lane_f64(accP, 1),
                   vgetq_lane_f64(accQ, 0) + vgetq_lane_f64(accQ, 1)};
}

}  // namespace

void contractKernelNeon(const Complex* a, const Complex* bt, Complex* c,
                        std::size_t n, std::size_t k,
                        std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
        const std::size_t i = e / n;
        const std::size_t j = e % n;
        c[e] = dotNeon(a + i * k, bt + j * k, k);
    }
}

}  // namespace qtns

#endif  // aarch64
