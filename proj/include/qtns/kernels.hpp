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

#ifndef QTNS_KERNELS_HPP
#define QTNS_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

namespace qtns {

using Complex = std::complex<double>;

// The contraction inner loop is a complex GEMM against a transposed right
// operand: C[i, j] = sum_k A[i*K + k] * Bt[j*K + k], with C of shape M x N
// stored row-major. A kernel computes the output entries in [begin, end)
// of the flattened C (entry e maps to i = e / N, j = e % N). Each output
// entry is produced by exactly one call site worker and the k-summation
// order is fixed per kernel, so results do not depend on how the range is
// partitioned across threads.
using ContractKernelFn = void (*)(const Complex* a, const Complex* bt, Complex* c,
                                  std::size_t n, std::size_t k,
                                  std::size_t begin, std::size_t end);

enum class KernelChoice {
    Auto,    ///< use the best backend the CPU supports
    Scalar,  ///< portable reference kernel
    Simd,    ///< vectorized backend; falls back to scalar if unsupported
};

void contractKernelScalar(const Complex* a, const Complex* bt, Complex* c,
                          std::size_t n, std::size_t k,
                          std::size_t begin, std::size_t end);

#if defined(__x86_64__) || defined(_M_X64)
void contractKernelAvx2(const Complex* a, const Complex* bt, Complex* c,
                        std::size_t n, std::size_t k,
                        std::size_t begin, std::size_t end);
#endif
#if defined(__aarch64__)
void contractKernelNeon(const Complex* a, const Complex* bt, Complex* c,
                        std::size_t n, std::size_t k,
                        std::size_t begin, std::size_t end);
#endif

/// True if a vectorized kernel is available on this CPU.
bool simdKernelAvailable();

/// Resolves a choice to a concrete kernel. SIMD kernels require the
/// contracted extent k to be a multiple of 4, which holds for every
/// contraction of dimension-4 indices.
ContractKernelFn resolveKernel(KernelChoice choice);

/// Name of the kernel a choice resolves to ("scalar", "avx2", "neon").
std::string kernelName(KernelChoice choice);

}  // namespace qtns

#endif
