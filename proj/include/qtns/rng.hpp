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

#ifndef QTNS_RNG_HPP
#define QTNS_RNG_HPP

#include <cstdint>

namespace qtns {

/// Small deterministic PRNG (splitmix64). Used everywhere seeds appear so
/// that results are reproducible across platforms and standard libraries;
/// std::uniform_* distributions are implementation-defined and are avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling, no modulo bias
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    int intIn(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double realIn(double lo, double hi) { return lo + (hi - lo) * real(); }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

/// Derives an independent stream, e.g. one per restart or per trial.
inline std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x6a09e667f3bcc909ull + stream * 0x3c6ef372fe94f82bull));
    return r.next();
}

}  // namespace qtns

#endif
