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

#include "qtns/tensor.hpp"

#include <algorithm>
#include <thread>

namespace qtns {

namespace {

void checkShape(const std::vector<WireId>& indices, const std::vector<Complex>& entries) {
    if (indices.size() > 30) throw std::invalid_argument("tensor rank too large");
    if (entries.size() != pow4(static_cast<int>(indices.size())))
        throw std::invalid_argument("entry count must be 4^rank");
}

void checkDistinct(const std::vector<WireId>& indices) {
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = i + 1; j < indices.size(); ++j)
            if (indices[i] == indices[j])
                throw std::invalid_argument("duplicate index label in tensor");
}

}  // namespace

Tensor::Tensor(std::vector<WireId> indices, std::vector<Complex> entries)
    : indices_(std::move(indices)), entries_(std::move(entries)) {
    checkShape(indices_, entries_);
    checkDistinct(indices_);
}

Tensor::Tensor(std::vector<WireId> indices, std::vector<Complex> entries, AllowDuplicateLabels)
    : indices_(std::move(indices)), entries_(std::move(entries)) {
    checkShape(indices_, entries_);
}

Tensor Tensor::scalar(Complex value) {
    Tensor t;
    t.entries_[0] = value;
    return t;
}

bool Tensor::hasIndex(WireId w) const { return indexPosition(w) >= 0; }

int Tensor::indexPosition(WireId w) const {
    for (std::size_t i = 0; i < indices_.size(); ++i)
        if (indices_[i] == w) return static_cast<int>(i);
    return -1;
}

Complex Tensor::at(std::span<const int> multiIndex) const {
    if (multiIndex.size() != indices_.size())
        throw std::invalid_argument("multi-index length does not match rank");
    std::uint64_t off = 0;
    for (int d : multiIndex) {
        if (d < 0 || d > 3) throw std::out_of_range("index digit out of range");
        off = off * 4 + static_cast<std::uint64_t>(d);
    }
    return entries_[off];
}

Tensor Tensor::relabeled(std::vector<WireId> newIndices) const {
    if (newIndices.size() != indices_.size())
        throw std::invalid_argument("relabel rank mismatch");
    return Tensor(std::move(newIndices), entries_);
}

namespace {

// Gathered copy of src with axes reordered to `perm` (output axis d reads
// source axis perm[d]). Row-major odometer walk, O(1) amortized per entry.
std::vector<Complex> permuteEntries(std::span<const Complex> src, std::span<const int> perm) {
    const int rank = static_cast<int>(perm.size());
    std::vector<Complex> dst(src.size());
    if (rank == 0) {
        dst[0] = src[0];
        return dst;
    }
    std::vector<std::uint64_t> stride(rank);
    for (int ax = 0; ax < rank; ++ax) stride[ax] = pow4(rank - 1 - perm[ax]);
    std::vector<int> counter(rank, 0);
    std::uint64_t srcOff = 0;
    const std::uint64_t total = src.size();
    for (std::uint64_t d = 0; d < total; ++d) {
        dst[d] = src[srcOff];
        for (int ax = rank - 1; ax >= 0; --ax) {
            srcOff += stride[ax];
            if (++counter[ax] < 4) break;
            counter[ax] = 0;
            srcOff -= stride[ax] * 4;
        }
    }
    return dst;
}

bool isIdentityPerm(std::span<const int> perm) {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

// Holds either a borrowed pointer into an existing tensor or an owned
// permuted copy. When the caller surrendered the source storage (`owner`),
// it is dropped as soon as the copy exists.
struct Operand {
    std::vector<Complex> owned;
    const Complex* data = nullptr;
};

Operand prepareOperand(std::span<const Complex> src, std::span<const int> perm,
                       std::vector<Complex>* owner) {
    Operand op;
    if (isIdentityPerm(perm)) {
        if (owner != nullptr) {
            op.owned = std::move(*owner);
            op.data = op.owned.data();
        } else {
            op.data = src.data();
        }
        return op;
    }
    op.owned = permuteEntries(src, perm);
    op.data = op.owned.data();
    if (owner != nullptr) {
        owner->clear();
        owner->shrink_to_fit();
    }
    return op;
}

std::pair<Tensor, ContractionCost> contractImpl(const Tensor& a, const Tensor& b,
                                                const ExecConfig& cfg,
                                                std::vector<Complex>* releaseA,
                                                std::vector<Complex>* releaseB) {
    // Shared labels in ascending label order: the per-entry summation order
    // is then a function of the label set alone, making contract(a, b) and
    // contract(b, a) agree bitwise.
    std::vector<int> sharedA, sharedB, freeA, freeB;
    std::vector<std::pair<WireId, std::pair<int, int>>> shared;
    for (int i = 0; i < a.rank(); ++i) {
        const int j = b.indexPosition(a.indices()[i]);
        if (j >= 0) {
            shared.push_back({a.indices()[i], {i, j}});
        } else {
            freeA.push_back(i);
        }
    }
    if (shared.empty()) throw std::invalid_argument("disjoint tensors");
    std::sort(shared.begin(), shared.end());
    for (const auto& [label, pos] : shared) {
        sharedA.push_back(pos.first);
        sharedB.push_back(pos.second);
    }
    for (int j = 0; j < b.rank(); ++j)
        if (!a.hasIndex(b.indices()[j])) freeB.push_back(j);

    const int x = static_cast<int>(freeA.size());
    const int y = static_cast<int>(sharedA.size());
    const int z = static_cast<int>(freeB.size());
    const int outRank = x + z;
    if (outRank > cfg.rankCap) throw RankCapError(outRank, cfg.rankCap);

    ContractionCost cost;
    cost.flops = pow4(x + y + z);
    cost.peakRank = std::max({a.rank(), b.rank(), outRank});

    std::vector<WireId> outIndices;
    outIndices.reserve(static_cast<std::size_t>(outRank));
    for (int i : freeA) outIndices.push_back(a.indices()[i]);
    for (int j : freeB) outIndices.push_back(b.indices()[j]);

    // A -> [free..., shared...] (M x K), B -> [free..., shared...] (N x K);
    // both operands then stream contiguously along k.
    std::vector<int> permA(freeA);
    permA.insert(permA.end(), sharedA.begin(), sharedA.end());
    std::vector<int> permB(freeB);
    permB.insert(permB.end(), sharedB.begin(), sharedB.end());

    const std::span<const Complex> dataA =
        releaseA != nullptr ? std::span<const Complex>(*releaseA) : a.entries();
    const std::span<const Complex> dataB =
        releaseB != nullptr ? std::span<const Complex>(*releaseB) : b.entries();
    Operand opA = prepareOperand(dataA, permA, releaseA);
    Operand opB = prepareOperand(dataB, permB, releaseB);

    const std::size_t m = pow4(x);
    const std::size_t n = pow4(z);
    const std::size_t k = pow4(y);
    std::vector<Complex> out(m * n);

    const ContractKernelFn kernel = resolveKernel(cfg.kernel);
    const std::size_t total = m * n;
    int workers = cfg.threads;
    if (workers < 1) workers = 1;
    if (cost.flops <= cfg.parallelThresholdFlops) workers = 1;
    if (static_cast<std::size_t>(workers) > total) workers = static_cast<int>(total);

    if (workers == 1) {
        kernel(opA.data, opB.data, out.data(), n, k, 0, total);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::size_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(total, w * chunk);
            const std::size_t end = std::min(total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(kernel, opA.data, opB.data, out.data(), n, k, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    return {Tensor(std::move(outIndices), std::move(out)), cost};
}

}  // namespace

std::pair<Tensor, ContractionCost> contract(const Tensor& a, const Tensor& b,
                                            const ExecConfig& cfg) {
    return contractImpl(a, b, cfg, nullptr, nullptr);
}

std::pair<Tensor, ContractionCost> contract(Tensor&& a, Tensor&& b, const ExecConfig& cfg) {
    std::vector<Complex> ea = std::move(a).takeEntries();
    std::vector<Complex> eb = std::move(b).takeEntries();
    // a and b keep their index metadata; entry storage is handed to the
    // implementation so it can be dropped as soon as operands are staged.
    return contractImpl(a, b, cfg, &ea, &eb);
}

Tensor selfTrace(const Tensor& a, WireId label) {
    int first = -1, second = -1;
    for (int i = 0; i < a.rank(); ++i) {
        if (a.indices()[i] != label) continue;
        if (first < 0)
            first = i;
        else if (second < 0)
            second = i;
        else
            throw std::invalid_argument("label appears more than twice");
    }
    if (second < 0) throw std::invalid_argument("label does not appear twice");

    const int rank = a.rank();
    const int outRank = rank - 2;
    std::vector<WireId> outIndices;
    std::vector<std::uint64_t> outStride;
    outIndices.reserve(static_cast<std::size_t>(outRank));
    for (int i = 0; i < rank; ++i) {
        if (i == first || i == second) continue;
        outIndices.push_back(a.indices()[i]);
        outStride.push_back(pow4(rank - 1 - i));
    }
    const std::uint64_t diagStride = pow4(rank - 1 - first) + pow4(rank - 1 - second);

    std::vector<Complex> out(pow4(outRank));
    std::vector<int> counter(static_cast<std::size_t>(outRank), 0);
    std::uint64_t base = 0;
    for (std::uint64_t d = 0; d < out.size(); ++d) {
        Complex sum{0.0, 0.0};
        for (int diag = 0; diag < 4; ++diag) sum += a.entries()[base + diag * diagStride];
        out[d] = sum;
        for (int ax = outRank - 1; ax >= 0; --ax) {
            base += outStride[ax];
            if (++counter[ax] < 4) break;
            counter[ax] = 0;
            base -= outStride[ax] * 4;
        }
    }
    return Tensor(std::move(outIndices), std::move(out));
}

}  // namespace qtns
