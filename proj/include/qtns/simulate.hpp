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

#ifndef QTNS_SIMULATE_HPP
#define QTNS_SIMULATE_HPP

#include "qtns/network.hpp"
#include "qtns/ordering.hpp"

namespace qtns {

enum class PlannerKind { LineGraph, Stochastic };

struct PlannerConfig {
    PlannerKind kind = PlannerKind::LineGraph;
    int budgetRestarts = 10;  ///< line-graph planner restart budget
    int maxRejections = 0;    ///< stochastic planner; <= 0 means 2 x wire count
    std::uint64_t seed = 1;
};

ContractionPlan makePlan(const NetworkShape& shape, const PlannerConfig& cfg);

/// buildNetwork + plan + executePlan. The imaginary part is reported for
/// diagnostics; it vanishes (|Im| < 1e-8) whenever the measurement set is
/// Hermitian, which holds for every MeasurementKind.
ExecutionResult expectation(const Circuit& c, const PlannerConfig& planner,
                            const ExecConfig& exec = {});

}  // namespace qtns

#endif
