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

#ifndef QTNS_TENSOR_HPP
#define QTNS_TENSOR_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtns/kernels.hpp"

namespace qtns {

using WireId = std::int32_t;
using NodeId = std::int32_t;

/// 4^e as a 64-bit count. Exponents stay small (ranks are capped well below
/// 30), so this never overflows.
constexpr std::uint64_t pow4(int e) { return std::uint64_t{1} << (2 * e); }

inline std::uint64_t saturatingAdd(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s < a ? ~std::uint64_t{0} : s;
}

/// Cost of one pairwise contraction: 4^(x+y+z) scalar operations for input
/// ranks x+y and y+z sharing y indices, plus the largest rank touched.
struct ContractionCost {
    std::uint64_t flops = 0;
    int peakRank = 0;
};

/// Runtime knobs for the contraction engine.
struct ExecConfig {
    int threads = 8;
    std::uint64_t parallelThresholdFlops = pow4(10);
    int rankCap = 15;  ///< refuse to materialize tensors of larger rank
    KernelChoice kernel = KernelChoice::Auto;
};

/// Thrown when a contraction would materialize a tensor above the rank cap.
/// Plan execution re-throws it annotated with the offending step and wire.
struct RankCapError : std::runtime_error {
    RankCapError(int attempted, int cap)
        : std::runtime_error("tensor of rank " + std::to_string(attempted) +
                             " exceeds rank cap " + std::to_string(cap)),
          attemptedRank(attempted),
          rankCap(cap) {}
    RankCapError(int attempted, int cap, int planStep, WireId planWire)
        : std::runtime_error("contraction step " + std::to_string(planStep) + " (wire " +
                             std::to_string(planWire) + "): tensor of rank " +
                             std::to_string(attempted) + " exceeds rank cap " +
                             std::to_string(cap)),
          attemptedRank(attempted),
          rankCap(cap),
          step(planStep),
          wire(planWire) {}
    int attemptedRank;
    int rankCap;
    int step = -1;
    WireId wire = -1;
};

/// Dense complex tensor whose indices all have dimension 4. Entries are
/// stored row-major in index order: the first index varies slowest. Index
/// labels are wire identifiers and are pairwise distinct; rank 0 is a
/// scalar. Tensors are immutable after construction and safe to share
/// across threads.
class Tensor {
public:
    struct AllowDuplicateLabels {};  // network-internal: self-loop intermediates

    Tensor() : entries_(1, Complex{0.0, 0.0}) {}

    Tensor(std::vector<WireId> indices, std::vector<Complex> entries);
    Tensor(std::vector<WireId> indices, std::vector<Complex> entries, AllowDuplicateLabels);

    static Tensor scalar(Complex value);

    int rank() const { return static_cast<int>(indices_.size()); }
    const std::vector<WireId>& indices() const { return indices_; }
    std::span<const Complex> entries() const { return entries_; }
    std::uint64_t size() const { return entries_.size(); }

    bool hasIndex(WireId w) const;
    /// Position of a label, -1 if absent.
    int indexPosition(WireId w) const;

    /// Entry at a multi-index given in the tensor's index order.
    Complex at(std::span<const int> multiIndex) const;
    Complex at(std::initializer_list<int> multiIndex) const {
        return at(std::span<const int>(multiIndex.begin(), multiIndex.size()));
    }

    /// Same entries under new labels (rank must match).
    Tensor relabeled(std::vector<WireId> newIndices) const;

    std::vector<Complex> takeEntries() && { return std::move(entries_); }

private:
    std::vector<WireId> indices_;
    std::vector<Complex> entries_;
};

/// Generalized tensor-tensor multiplication: sums every index label the two
/// tensors share (multi-edge contraction) over {0,1,2,3}. The output carries
/// a's free indices followed by b's free indices. Throws
/// std::invalid_argument("disjoint tensors") when no label is shared: outer
/// products are forbidden at the kernel level.
///
/// May partition the output entries across worker threads once the flop
/// count exceeds cfg.parallelThresholdFlops; each output entry is computed
/// by exactly one worker with a fixed per-entry summation order, so results
/// are bitwise independent of the thread count.
std::pair<Tensor, ContractionCost> contract(const Tensor& a, const Tensor& b,
                                            const ExecConfig& cfg = {});

/// Same, but releases each input's storage as soon as it is no longer
/// needed, bounding peak memory during large network contractions.
std::pair<Tensor, ContractionCost> contract(Tensor&& a, Tensor&& b,
                                            const ExecConfig& cfg = {});

/// Sums the diagonal over the two legs carrying `label` (a self-loop left by
/// a network merge); the rank drops by 2. Throws if the label does not
/// appear exactly twice.
Tensor selfTrace(const Tensor& a, WireId label);

}  // namespace qtns

#endif
