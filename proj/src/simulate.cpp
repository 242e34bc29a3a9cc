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

#include "qtns/simulate.hpp"

namespace qtns {

ContractionPlan makePlan(const NetworkShape& shape, const PlannerConfig& cfg) {
    switch (cfg.kind) {
        case PlannerKind::LineGraph:
            return lineGraphPlan(shape, cfg.budgetRestarts, cfg.seed);
        case PlannerKind::Stochastic:
            return stochasticPlan(shape, cfg.maxRejections, cfg.seed);
    }
    throw std::invalid_argument("unknown planner");
}

ExecutionResult expectation(const Circuit& c, const PlannerConfig& planner,
                            const ExecConfig& exec) {
    const TensorNetwork net = buildNetwork(c);
    const ContractionPlan plan = makePlan(shapeOf(net), planner);
    return executePlan(net, plan, exec);
}

}  // namespace qtns
