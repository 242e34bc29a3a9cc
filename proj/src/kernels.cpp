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

bool simdKernelAvailable() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#elif defined(__aarch64__)
    return true;  // NEON is mandatory on armv8
#else
    return false;
#endif
}

ContractKernelFn resolveKernel(KernelChoice choice) {
    if (choice != KernelChoice::Scalar && simdKernelAvailable()) {
#if defined(__x86_64__) || defined(_M_X64)
        return &contractKernelAvx2;
#elif defined(__aarch64__)
        return &contractKernelNeon;
#endif
    }
    return &contractKernelScalar;
}

std::string kernelName(KernelChoice choice) {
    if (choice != KernelChoice::Scalar && simdKernelAvailable()) {
#if defined(__x86_64__) || defined(_M_X64)
        return "avx2";
#elif defined(__aarch64__)
        return "neon";
#endif
    }
    return "scalar";
}

}  // namespace qtns
