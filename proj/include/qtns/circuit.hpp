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

#ifndef QTNS_CIRCUIT_HPP
#define QTNS_CIRCUIT_HPP

#include <string>
#include <vector>

#include "qtns/gates.hpp"

namespace qtns {

enum class GateKind {
    X, Y, Z, H, S, T,
    Rx, Ry, Rz,
    Cnot, Cz, Swap, Zz,
    Custom,  ///< user-defined unitary (DEF block or API)
    Kraus,   ///< user-defined channel (API only; not expressible in files)
};

/// One gate application. `defIndex` points into Circuit::defs for Custom
/// gates and Circuit::channels for Kraus nodes.
struct GateApplication {
    GateKind kind = GateKind::X;
    std::vector<double> params;
    int qubit0 = 0;
    int qubit1 = -1;  // -1 for single-qubit gates
    int defIndex = -1;

    int arity() const { return qubit1 < 0 ? 1 : 2; }
};

struct GateDef {
    std::string name;
    int arity = 1;  // 1 or 2 qubits
    SqMatrix matrix;
};

/// Ordered gate list over numQubits qubits with one measurement designator
/// per qubit (default Trace).
struct Circuit {
    int numQubits = 0;
    std::vector<GateDef> defs;
    std::vector<KrausChannel> channels;
    std::vector<GateApplication> ops;
    std::vector<MeasurementKind> measurements;

    explicit Circuit(int n = 0)
        : numQubits(n), measurements(static_cast<std::size_t>(n), MeasurementKind::Trace) {
        if (n < 0) throw std::invalid_argument("negative qubit count");
    }

    // Append helpers; all validate qubit indices and gate arity.
    void addGate(GateKind kind, int q);
    void addGate(GateKind kind, double param, int q);
    void addGate(GateKind kind, int q0, int q1);
    void addGate(GateKind kind, double param, int q0, int q1);
    int addDef(GateDef def);                // returns def index
    void addCustom(int defIndex, int q0, int q1 = -1);
    int addChannel(KrausChannel ch);        // returns channel index
    void addKraus(int channelIndex, int q0, int q1 = -1);
    void setMeasurement(int q, MeasurementKind kind);

    bool hasKrausNodes() const;
};

/// Number of parameters a built-in gate kind takes (Rx/Ry/Rz/Zz: 1, rest: 0).
int gateParamCount(GateKind kind);
/// Qubits a built-in gate kind acts on (1 or 2).
int gateArity(GateKind kind);
/// Canonical (upper-case) text name of a built-in gate kind.
std::string gateName(GateKind kind);

/// Hilbert-space unitary of a built-in gate application.
SqMatrix builtinGateMatrix(GateKind kind, std::span<const double> params);

/// Superoperator tensor of any gate application (built-in, Custom, or
/// Kraus), with default index labels 0..rank-1. Shared by the network
/// builder and the reference oracle so both use identical gate constants.
Tensor gateSuperoperator(const GateApplication& op, const Circuit& c);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parses the line-oriented circuit text format (see README). Unmeasured
/// qubits default to Trace.
Circuit parseCircuit(const std::string& text);

/// Inverse of parseCircuit for file-expressible circuits; throws if the
/// circuit contains Kraus nodes.
std::string serializeCircuit(const Circuit& c);

}  // namespace qtns

#endif
