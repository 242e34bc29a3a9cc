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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtns/oracle.hpp"
#include "qtns/qaoa.hpp"
#include "qtns/simulate.hpp"

namespace {

using nlohmann::json;
using namespace qtns;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // parse/config errors
constexpr int kExitRankCap = 2;
constexpr int kExitVanishing = 3;

struct CommonOpts {
    std::string planner = "lg";
    int threads = 8;
    std::uint64_t seed = 1;
    int budget = 10;
    int maxRejections = 0;
    int rankCap = 15;
    std::string format = "text";
    std::string orderingFile;
    std::string kernel = "auto";
};

void addCommon(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--planner", o.planner, "contraction planner")
        ->check(CLI::IsMember({"lg", "stoch"}));
    cmd->add_option("--threads", o.threads, "worker threads for tensor contractions")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for every randomized choice");
    cmd->add_option("--budget", o.budget, "line-graph planner restart budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-rejections", o.maxRejections,
                    "stochastic planner rejection patience (0 = twice the wire count)");
    cmd->add_option("--rank-cap", o.rankCap, "refuse tensors above this rank")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    cmd->add_option("--ordering-file", o.orderingFile,
                    "import a wire elimination ordering instead of planning");
    cmd->add_option("--kernel", o.kernel, "contraction kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "simd"}));
}

ExecConfig execConfig(const CommonOpts& o) {
    ExecConfig cfg;
    cfg.threads = o.threads;
    cfg.rankCap = o.rankCap;
    if (o.kernel == "scalar") cfg.kernel = KernelChoice::Scalar;
    else if (o.kernel == "simd") cfg.kernel = KernelChoice::Simd;
    return cfg;
}

PlannerConfig plannerConfig(const CommonOpts& o) {
    PlannerConfig cfg;
    cfg.kind = o.planner == "stoch" ? PlannerKind::Stochastic : PlannerKind::LineGraph;
    cfg.budgetRestarts = o.budget;
    cfg.maxRejections = o.maxRejections;
    cfg.seed = o.seed;
    return cfg;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Circuit loadCircuit(const std::string& path) { return parseCircuit(readFile(path)); }

/// Plan from flags: imported ordering file when given, planner otherwise.
ContractionPlan resolvePlan(const NetworkShape& shape, const CommonOpts& o) {
    if (!o.orderingFile.empty()) {
        const EliminationOrdering ord =
            parseOrdering(readFile(o.orderingFile), static_cast<int>(shape.wires.size()));
        return planFromOrdering(shape, ord);
    }
    return makePlan(shape, plannerConfig(o));
}

int cmdSimulate(const std::string& file, const CommonOpts& o) {
    const Circuit c = loadCircuit(file);
    const auto t0 = std::chrono::steady_clock::now();
    const TensorNetwork net = buildNetwork(c);
    const ContractionPlan plan = resolvePlan(shapeOf(net), o);
    const ExecutionResult r = executePlan(net, plan, execConfig(o));
    const double wallMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.format == "jsonl") {
        json line = {{"cmd", "simulate"},          {"value_re", r.value.real()},
                     {"value_im", r.value.imag()}, {"flops", r.flops},
                     {"peak_rank", r.peakRank},    {"plan_width", plan.width},
                     {"wall_ms", wallMs}};
        std::cout << line.dump() << '\n';
    } else {
        std::cout << "value      " << r.value.real() << (r.value.imag() < 0 ? " - " : " + ")
                  << std::abs(r.value.imag()) << "i\n"
                  << "flops      " << r.flops << '\n'
                  << "peak rank  " << r.peakRank << '\n'
                  << "plan width " << plan.width << '\n'
                  << "wall ms    " << wallMs << '\n';
    }
    return kExitOk;
}

int cmdPlan(const std::string& file, const std::string& exportPath, const CommonOpts& o) {
    const Circuit c = loadCircuit(file);
    const TensorNetwork net = buildNetwork(c);
    const ContractionPlan plan = resolvePlan(shapeOf(net), o);

    EliminationOrdering ord;
    ord.order.assign(plan.order.begin(), plan.order.end());
    const std::string serialized = serializeOrdering(ord);
    if (!exportPath.empty()) {
        std::ofstream out(exportPath);
        if (!out) throw std::runtime_error("cannot write file: " + exportPath);
        out << serialized << '\n';
    }

    if (o.format == "jsonl") {
        json line = {{"cmd", "plan"},
                     {"width", plan.width},
                     {"predicted_flops", plan.predictedFlops},
                     {"predicted_peak_rank", plan.predictedPeakRank},
                     {"wires", plan.order.size()},
                     {"ordering", serialized}};
        std::cout << line.dump() << '\n';
    } else {
        std::cout << "width           " << plan.width << '\n'
                  << "predicted flops " << plan.predictedFlops << '\n'
                  << "predicted peak  " << plan.predictedPeakRank << '\n'
                  << "wires           " << plan.order.size() << '\n'
                  << "ordering        " << serialized << '\n';
    }
    return kExitOk;
}

int cmdQaoaGen(int n, int k, int p, std::vector<double> gammas, std::vector<double> betas,
               bool ring, int measureEdge, const std::string& graphOut,
               const std::string& circuitOut, const CommonOpts& o) {
    const MaxCutInstance inst =
        ring ? ringPlusChords(n, o.seed) : randomRegularGraph(n, k, o.seed);
    if (gammas.empty()) gammas.assign(static_cast<std::size_t>(p), 0.0);
    if (betas.empty()) betas.assign(static_cast<std::size_t>(p), 0.0);
    QaoaParams params{p, std::move(gammas), std::move(betas)};
    Circuit c = qaoaCircuit(inst, params);
    if (measureEdge >= 0) {
        if (measureEdge >= inst.graph.edgeCount())
            throw std::runtime_error("edge index out of range");
        const auto [u, v] = inst.graph.edges[static_cast<std::size_t>(measureEdge)];
        c.setMeasurement(u, MeasurementKind::Z);
        c.setMeasurement(v, MeasurementKind::Z);
    }

    std::ofstream gout(graphOut);
    if (!gout) throw std::runtime_error("cannot write file: " + graphOut);
    gout << serializeGraph(inst.graph);
    std::ofstream cout_(circuitOut);
    if (!cout_) throw std::runtime_error("cannot write file: " + circuitOut);
    cout_ << serializeCircuit(c);

    if (o.format == "jsonl") {
        json line = {{"cmd", "qaoa-gen"},
                     {"vertices", inst.graph.n},
                     {"edges", inst.graph.edgeCount()},
                     {"graph_file", graphOut},
                     {"circuit_file", circuitOut}};
        std::cout << line.dump() << '\n';
    } else {
        std::cout << "edges " << inst.graph.edgeCount() << '\n';
    }
    return kExitOk;
}

int cmdAnswerString(const std::string& file, const CommonOpts& o) {
    const Circuit c = loadCircuit(file);
    const AnswerString ans = estimateAnswerString(c, plannerConfig(o), o.seed, execConfig(o));

    std::string bits;
    for (int b : ans.bits) bits.push_back(b ? '1' : '0');
    if (o.format == "jsonl") {
        for (std::size_t q = 0; q < ans.bits.size(); ++q) {
            json line = {{"qubit", q},
                         {"p0", ans.p0[q]},
                         {"p1", 1.0 - ans.p0[q]},
                         {"bit", ans.bits[q]}};
            std::cout << line.dump() << '\n';
        }
        json fin = {{"bits", bits}, {"chosen_probabilities", ans.chosenProb}};
        std::cout << fin.dump() << '\n';
    } else {
        std::cout << "bits " << bits << '\n';
        for (std::size_t q = 0; q < ans.bits.size(); ++q)
            std::cout << "qubit " << q << "  p0 " << ans.p0[q] << "  chose " << ans.bits[q]
                      << '\n';
    }
    return kExitOk;
}

int cmdHarness(int n, int m, int p, int trials, const std::string& outPath,
               const CommonOpts& o) {
    const HarnessResult res = productStateHarness(n, m, p, trials, o.seed);
    std::ofstream fileOut;
    std::ostream* out = &std::cout;
    if (!outPath.empty()) {
        fileOut.open(outPath);
        if (!fileOut) throw std::runtime_error("cannot write file: " + outPath);
        out = &fileOut;
    }
    *out << "trial,rank,l1\n";
    for (std::size_t t = 0; t < res.ranks.size(); ++t)
        *out << t << ',' << res.ranks[t] << ',' << res.l1[t] << '\n';
    return kExitOk;
}

int cmdOracle(const std::string& file, const CommonOpts& o) {
    const Circuit c = loadCircuit(file);
    const Complex v = oracleExpectationValue(c);
    if (o.format == "jsonl") {
        json line = {{"cmd", "oracle"}, {"value_re", v.real()}, {"value_im", v.imag()}};
        std::cout << line.dump() << '\n';
    } else {
        std::cout << "value " << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag())
                  << "i\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensor network contraction engine for quantum circuits"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string circuitFile, graphOut = "qaoa.graph", circuitOut = "qaoa.circuit";
    std::string exportOrdering, harnessOut;
    int n = 6, k = 3, p = 1, trials = 1000, measureEdge = -1;
    int harnessN = 6, harnessM = 10, harnessP = 2;
    bool ring = false;
    std::vector<double> gammas, betas;

    CLI::App* simulate = app.add_subcommand("simulate", "contract a circuit to its expectation");
    simulate->add_option("circuit", circuitFile, "circuit file")->required();
    addCommon(simulate, opts);

    CLI::App* plan = app.add_subcommand("plan", "plan a contraction without touching tensors");
    plan->add_option("circuit", circuitFile, "circuit file")->required();
    plan->add_option("--export-ordering", exportOrdering, "write the wire ordering to a file");
    addCommon(plan, opts);

    CLI::App* gen = app.add_subcommand("qaoa-gen", "generate a Max-Cut instance and QAOA circuit");
    gen->add_option("n", n, "vertex count")->required();
    gen->add_option("k", k, "regularity")->required();
    gen->add_option("p", p, "QAOA rounds")->required();
    gen->add_option("--gamma", gammas, "clause angles (one per round)")->delimiter(',');
    gen->add_option("--beta", betas, "mixer angles (one per round)")->delimiter(',');
    gen->add_flag("--ring-chords", ring, "ring plus random chords instead of pairing model");
    gen->add_option("--measure-edge", measureEdge, "set MEASZ on this edge's endpoints");
    gen->add_option("--graph-out", graphOut, "graph file path");
    gen->add_option("--circuit-out", circuitOut, "circuit file path");
    addCommon(gen, opts);

    CLI::App* answer = app.add_subcommand("answer-string", "estimate a high-probability bit string");
    answer->add_option("circuit", circuitFile, "circuit file")->required();
    addCommon(answer, opts);

    CLI::App* harness = app.add_subcommand("harness", "answer-string validation harness (CSV)");
    harness->add_option("--n", harnessN, "qubits");
    harness->add_option("--m", harnessM, "clause-count parameter");
    harness->add_option("--p", harnessP, "rounds");
    harness->add_option("--trials", trials, "trial count")->check(CLI::PositiveNumber);
    harness->add_option("--out", harnessOut, "CSV output path (default stdout)");
    addCommon(harness, opts);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference expectation");
    oracle->add_option("circuit", circuitFile, "circuit file")->required();
    addCommon(oracle, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmdSimulate(circuitFile, opts);
        if (plan->parsed()) return cmdPlan(circuitFile, exportOrdering, opts);
        if (gen->parsed())
            return cmdQaoaGen(n, k, p, gammas, betas, ring, measureEdge, graphOut, circuitOut,
                              opts);
        if (answer->parsed()) return cmdAnswerString(circuitFile, opts);
        if (harness->parsed()) return cmdHarness(harnessN, harnessM, harnessP, trials, harnessOut, opts);
        if (oracle->parsed()) return cmdOracle(circuitFile, opts);
    } catch (const RankCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRankCap;
    } catch (const VanishingBranchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVanishing;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
