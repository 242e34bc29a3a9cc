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

#include <doctest.h>

#include "qtns/gates.hpp"
#include "qtns/tensor.hpp"
#include "support.hpp"

using namespace qtns;

namespace {

Tensor identitySuper(WireId out, WireId in) {
    return makeSuperoperator(SqMatrix::identity(2)).relabeled({out, in});
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("construction enforces shape and distinct labels") {
    CHECK_NOTHROW(Tensor({}, {Complex{1.0, 0.0}}));
    CHECK_NOTHROW(Tensor({7}, std::vector<Complex>(4)));
    CHECK_THROWS_AS(Tensor({7}, std::vector<Complex>(5)), std::invalid_argument);
    CHECK_THROWS_AS(Tensor({1, 1}, std::vector<Complex>(16)), std::invalid_argument);
    CHECK_NOTHROW(Tensor({1, 1}, std::vector<Complex>(16), Tensor::AllowDuplicateLabels{}));
}

TEST_CASE("trace of the initial state is 1") {
    const Tensor rho = makeInputTensor().relabeled({0});
    const Tensor mTrace = makeMeasurementTensor(MeasurementKind::Trace).relabeled({0});
    const auto [scalar, cost] = contract(rho, mTrace);
    CHECK(scalar.rank() == 0);
    CHECK(scalar.entries()[0].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scalar.entries()[0].imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cost.flops == 4);  // 4^(0+1+0)
    CHECK(cost.peakRank == 1);
}

TEST_CASE("X superoperator maps the input state to [0,0,0,1]") {
    const Tensor rho = makeInputTensor().relabeled({1});
    const Tensor xTilde = makeSuperoperator(pauliX()).relabeled({2, 1});  // (out, in)
    const auto [out, cost] = contract(rho, xTilde);
    REQUIRE(out.rank() == 1);
    CHECK(out.indices()[0] == 2);
    // column 0 of the anti-diagonal matrix
    CHECK(out.at({0}) == Complex{0.0, 0.0});
    CHECK(out.at({1}) == Complex{0.0, 0.0});
    CHECK(out.at({2}) == Complex{0.0, 0.0});
    CHECK(out.at({3}) == Complex{1.0, 0.0});
    CHECK(cost.flops == pow4(2));
}

TEST_CASE("contracting with the identity superoperator relabels exactly") {
    Rng rng(11);
    const Tensor t = test::randomTensor({2, 3}, rng);
    const Tensor id = identitySuper(1, 2);
    const auto [out, cost] = contract(id, t);
    REQUIRE(out.rank() == 2);
    CHECK(out.indices()[0] == 1);
    CHECK(out.indices()[1] == 3);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(out.at({i, j}) == t.at({i, j}));
    CHECK(cost.flops == pow4(3));
}

TEST_CASE("contraction is commutative up to output index order") {
    Rng rng(17);
    const Tensor a = test::randomTensor({0, 1, 2}, rng);
    const Tensor b = test::randomTensor({2, 3, 1}, rng);  // shares {1, 2}
    const auto [ab, costAb] = contract(a, b);
    const auto [ba, costBa] = contract(b, a);
    REQUIRE(ab.rank() == 2);
    REQUIRE(ba.rank() == 2);
    CHECK(ab.indices() == std::vector<WireId>{0, 3});
    CHECK(ba.indices() == std::vector<WireId>{3, 0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(ab.at({i, j}) == ba.at({j, i}));
    CHECK(costAb.flops == costBa.flops);
}

TEST_CASE("reported flops is 4^(rank(a)+rank(b)-shared)") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int ra = rng.intIn(1, 4);
        const int shared = rng.intIn(1, ra);
        const int rb = rng.intIn(shared, 4);
        std::vector<WireId> la, lb;
        for (int i = 0; i < ra; ++i) la.push_back(i);
        for (int i = 0; i < shared; ++i) lb.push_back(i);        // overlap 0..shared-1
        for (int i = shared; i < rb; ++i) lb.push_back(100 + i); // fresh labels
        for (std::size_t i = lb.size(); i > 1; --i) std::swap(lb[i - 1], lb[rng.below(i)]);
        const Tensor a = test::randomTensor(la, rng);
        const Tensor b = test::randomTensor(lb, rng);
        const auto [out, cost] = contract(a, b);
        CHECK(cost.flops == pow4(ra + rb - shared));
        CHECK(out.rank() == ra + rb - 2 * shared);
        CHECK(cost.peakRank == std::max({ra, rb, out.rank()}));
    }
}

TEST_CASE("full contraction to a scalar is associative") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        // triangle of rank-2 tensors
        const Tensor a = test::randomTensor({0, 1}, rng);
        const Tensor b = test::randomTensor({1, 2}, rng);
        const Tensor c = test::randomTensor({2, 0}, rng);
        const Complex left = contract(contract(a, b).first, c).first.entries()[0];
        const Complex right = contract(a, contract(b, c).first).first.entries()[0];
        CHECK(std::abs(left - right) <= 1e-10 * std::max(1.0, std::abs(left)));
    }
}

TEST_CASE("outer products are rejected") {
    Rng rng(37);
    const Tensor a = test::randomTensor({0}, rng);
    const Tensor b = test::randomTensor({1}, rng);
    CHECK_THROWS_WITH_AS(static_cast<void>(contract(a, b)), "disjoint tensors",
                         std::invalid_argument);
}

TEST_CASE("rank cap refuses to materialize large outputs") {
    Rng rng(41);
    const Tensor a = test::randomTensor({0, 1, 2}, rng);
    const Tensor b = test::randomTensor({2, 3, 4}, rng);
    ExecConfig cfg;
    cfg.rankCap = 3;
    CHECK_THROWS_AS(static_cast<void>(contract(a, b, cfg)), RankCapError);
    cfg.rankCap = 4;
    CHECK_NOTHROW(static_cast<void>(contract(a, b, cfg)));
}

TEST_CASE("self-trace of superoperators") {
    auto loopify = [](const Tensor& t) {
        // same label on both legs, as a merge would leave it
        return Tensor({5, 5}, std::vector<Complex>(t.entries().begin(), t.entries().end()),
                      Tensor::AllowDuplicateLabels{});
    };
    const Tensor id = loopify(makeSuperoperator(SqMatrix::identity(2)));
    CHECK(selfTrace(id, 5).entries()[0] == Complex{4.0, 0.0});
    const Tensor x = loopify(makeSuperoperator(pauliX()));
    CHECK(selfTrace(x, 5).entries()[0] == Complex{0.0, 0.0});
    const Tensor z = loopify(makeSuperoperator(pauliZ()));
    CHECK(selfTrace(z, 5).entries()[0] == Complex{0.0, 0.0});

    CHECK_THROWS_AS(static_cast<void>(selfTrace(id, 7)), std::invalid_argument);
    Rng rng(5);
    CHECK_THROWS_AS(static_cast<void>(selfTrace(test::randomTensor({0, 1}, rng), 0)),
                    std::invalid_argument);
}

TEST_CASE("self-trace keeps remaining legs intact") {
    Rng rng(43);
    const Tensor base = test::randomTensor({0, 1, 2}, rng);
    const Tensor t(std::vector<WireId>{9, 4, 9},
                   std::vector<Complex>(base.entries().begin(), base.entries().end()),
                   Tensor::AllowDuplicateLabels{});
    const Tensor traced = selfTrace(t, 9);
    REQUIRE(traced.rank() == 1);
    CHECK(traced.indices()[0] == 4);
    for (int m = 0; m < 4; ++m) {
        Complex want{0.0, 0.0};
        for (int d = 0; d < 4; ++d) want += t.at({d, m, d});
        CHECK(std::abs(traced.at({m}) - want) < 1e-14);
    }
}

TEST_CASE("results are bitwise independent of thread count") {
    Rng rng(47);
    const Tensor a = test::randomTensor({0, 1, 2, 3}, rng);
    const Tensor b = test::randomTensor({2, 3, 4, 5}, rng);
    ExecConfig serial;
    serial.threads = 1;
    serial.parallelThresholdFlops = 0;
    const auto [ref, refCost] = contract(a, b, serial);
    for (int threads : {2, 3, 8}) {
        ExecConfig cfg;
        cfg.threads = threads;
        cfg.parallelThresholdFlops = 0;  // force the parallel path
        const auto [out, cost] = contract(a, b, cfg);
        REQUIRE(out.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(out.entries()[i] == ref.entries()[i]);
        CHECK(cost.flops == refCost.flops);
    }
}

TEST_CASE("move contraction matches copy contraction") {
    Rng rng(53);
    Tensor a = test::randomTensor({0, 1, 2}, rng);
    Tensor b = test::randomTensor({1, 2, 3}, rng);
    const auto [ref, refCost] = contract(a, b);
    const auto [out, cost] = contract(std::move(a), std::move(b));
    REQUIRE(out.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(out.entries()[i] == ref.entries()[i]);
    CHECK(cost.flops == refCost.flops);
}

}  // TEST_SUITE
