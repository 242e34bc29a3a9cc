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

#include "qtns/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace qtns {

namespace {

struct BuiltinInfo {
    GateKind kind;
    int arity;
    int params;
};

const std::map<std::string, BuiltinInfo>& builtinTable() {
    static const std::map<std::string, BuiltinInfo> table = {
        {"X", {GateKind::X, 1, 0}},       {"Y", {GateKind::Y, 1, 0}},
        {"Z", {GateKind::Z, 1, 0}},       {"H", {GateKind::H, 1, 0}},
        {"S", {GateKind::S, 1, 0}},       {"T", {GateKind::T, 1, 0}},
        {"RX", {GateKind::Rx, 1, 1}},     {"RY", {GateKind::Ry, 1, 1}},
        {"RZ", {GateKind::Rz, 1, 1}},     {"CNOT", {GateKind::Cnot, 2, 0}},
        {"CZ", {GateKind::Cz, 2, 0}},     {"SWAP", {GateKind::Swap, 2, 0}},
        {"ZZ", {GateKind::Zz, 2, 1}},
    };
    return table;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

void checkQubit(const Circuit& c, int q) {
    if (q < 0 || q >= c.numQubits) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

int gateParamCount(GateKind kind) {
    switch (kind) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Zz:
            return 1;
        default:
            return 0;
    }
}

int gateArity(GateKind kind) {
    switch (kind) {
        case GateKind::Cnot:
        case GateKind::Cz:
        case GateKind::Swap:
        case GateKind::Zz:
            return 2;
        case GateKind::Custom:
        case GateKind::Kraus:
            throw std::invalid_argument("arity of user-defined gate depends on its definition");
        default:
            return 1;
    }
}

std::string gateName(GateKind kind) {
    for (const auto& [name, info] : builtinTable())
        if (info.kind == kind) return name;
    throw std::invalid_argument("not a built-in gate");
}

void Circuit::addGate(GateKind kind, int q) {
    if (gateArity(kind) != 1 || gateParamCount(kind) != 0)
        throw std::invalid_argument("gate signature mismatch");
    checkQubit(*this, q);
    ops.push_back({kind, {}, q, -1, -1});
}

void Circuit::addGate(GateKind kind, double param, int q) {
    if (gateArity(kind) != 1 || gateParamCount(kind) != 1)
        throw std::invalid_argument("gate signature mismatch");
    checkQubit(*this, q);
    ops.push_back({kind, {param}, q, -1, -1});
}

void Circuit::addGate(GateKind kind, int q0, int q1) {
    if (gateArity(kind) != 2 || gateParamCount(kind) != 0)
        throw std::invalid_argument("gate signature mismatch");
    checkQubit(*this, q0);
    checkQubit(*this, q1);
    if (q0 == q1) throw std::invalid_argument("duplicate qubit in two-qubit gate");
    ops.push_back({kind, {}, q0, q1, -1});
}

void Circuit::addGate(GateKind kind, double param, int q0, int q1) {
    if (gateArity(kind) != 2 || gateParamCount(kind) != 1)
        throw std::invalid_argument("gate signature mismatch");
    checkQubit(*this, q0);
    checkQubit(*this, q1);
    if (q0 == q1) throw std::invalid_argument("duplicate qubit in two-qubit gate");
    ops.push_back({kind, {param}, q0, q1, -1});
}

int Circuit::addDef(GateDef def) {
    if (def.arity != 1 && def.arity != 2) throw std::invalid_argument("DEF arity must be 1 or 2");
    const int want = def.arity == 1 ? 2 : 4;
    if (def.matrix.dim() != want) throw std::invalid_argument("DEF matrix dimension mismatch");
    if (!def.matrix.isUnitary()) throw std::invalid_argument("DEF matrix is not unitary");
    defs.push_back(std::move(def));
    return static_cast<int>(defs.size()) - 1;
}

void Circuit::addCustom(int defIndex, int q0, int q1) {
    if (defIndex < 0 || defIndex >= static_cast<int>(defs.size()))
        throw std::invalid_argument("unknown gate definition");
    const GateDef& def = defs[static_cast<std::size_t>(defIndex)];
    checkQubit(*this, q0);
    if (def.arity == 2) {
        checkQubit(*this, q1);
        if (q0 == q1) throw std::invalid_argument("duplicate qubit in two-qubit gate");
    } else if (q1 != -1) {
        throw std::invalid_argument("single-qubit gate given two qubits");
    }
    ops.push_back({GateKind::Custom, {}, q0, def.arity == 2 ? q1 : -1, defIndex});
}

int Circuit::addChannel(KrausChannel ch) {
    validateKrausChannel(ch);
    channels.push_back(std::move(ch));
    return static_cast<int>(channels.size()) - 1;
}

void Circuit::addKraus(int channelIndex, int q0, int q1) {
    if (channelIndex < 0 || channelIndex >= static_cast<int>(channels.size()))
        throw std::invalid_argument("unknown Kraus channel");
    const int arity = channels[static_cast<std::size_t>(channelIndex)].dim() == 2 ? 1 : 2;
    checkQubit(*this, q0);
    if (arity == 2) {
        checkQubit(*this, q1);
        if (q0 == q1) throw std::invalid_argument("duplicate qubit in two-qubit gate");
    } else if (q1 != -1) {
        throw std::invalid_argument("single-qubit channel given two qubits");
    }
    ops.push_back({GateKind::Kraus, {}, q0, arity == 2 ? q1 : -1, channelIndex});
}

void Circuit::setMeasurement(int q, MeasurementKind kind) {
    checkQubit(*this, q);
    measurements[static_cast<std::size_t>(q)] = kind;
}

bool Circuit::hasKrausNodes() const {
    return std::any_of(ops.begin(), ops.end(),
                       [](const GateApplication& op) { return op.kind == GateKind::Kraus; });
}

SqMatrix builtinGateMatrix(GateKind kind, std::span<const double> params) {
    switch (kind) {
        case GateKind::X: return pauliX();
        case GateKind::Y: return pauliY();
        case GateKind::Z: return pauliZ();
        case GateKind::H: return hadamard();
        case GateKind::S: return phaseS();
        case GateKind::T: return phaseT();
        case GateKind::Rx: return rotationX(params[0]);
        case GateKind::Ry: return rotationY(params[0]);
        case GateKind::Rz: return rotationZ(params[0]);
        case GateKind::Cnot: return cnot();
        case GateKind::Cz: return cz();
        case GateKind::Swap: return swapGate();
        case GateKind::Zz: return zzPhase(params[0]);
        default: throw std::invalid_argument("not a built-in gate");
    }
}

Tensor gateSuperoperator(const GateApplication& op, const Circuit& c) {
    switch (op.kind) {
        case GateKind::Custom:
            return makeSuperoperator(c.defs[static_cast<std::size_t>(op.defIndex)].matrix);
        case GateKind::Kraus:
            return makeKrausSuperoperator(c.channels[static_cast<std::size_t>(op.defIndex)]);
        default:
            return makeSuperoperator(builtinGateMatrix(op.kind, op.params));
    }
}

namespace {

struct Cursor {
    std::vector<std::vector<std::string>> lines;  // tokenized, comments stripped
    std::vector<int> lineNo;
};

Cursor tokenize(const std::string& text) {
    Cursor cur;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        cur.lines.push_back(std::move(toks));
        cur.lineNo.push_back(no);
    }
    return cur;
}

int parseInt(const std::string& tok, int line, const char* what) {
    int v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
    return v;
}

double parseFloat(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "malformed parameter '" + tok + "'");
    }
}

Complex parseComplexPair(const std::string& tok, int line) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos)
        throw ParseError(line, "matrix entry '" + tok + "' is not a re,im pair");
    return Complex{parseFloat(tok.substr(0, comma), line), parseFloat(tok.substr(comma + 1), line)};
}

}  // namespace

Circuit parseCircuit(const std::string& text) {
    const Cursor cur = tokenize(text);
    if (cur.lines.empty()) throw ParseError(1, "missing qubit count");
    if (cur.lines[0].size() != 1)
        throw ParseError(cur.lineNo[0], "first line must be the qubit count");
    const int n = parseInt(cur.lines[0][0], cur.lineNo[0], "qubit count");
    if (n <= 0) throw ParseError(cur.lineNo[0], "qubit count must be positive");

    Circuit c(n);
    std::map<std::string, int> defByName;
    std::vector<bool> measured(static_cast<std::size_t>(n), false);

    auto qubitArg = [&](const std::string& tok, int line) {
        const int q = parseInt(tok, line, "qubit index");
        if (q < 0 || q >= n) throw ParseError(line, "qubit index out of range");
        return q;
    };

    std::size_t li = 1;
    while (li < cur.lines.size()) {
        const auto& toks = cur.lines[li];
        const int line = cur.lineNo[li];
        const std::string head = upper(toks[0]);

        if (head == "MEAST" || head == "MEASX" || head == "MEASY" || head == "MEASZ" ||
            head == "PROJ0" || head == "PROJ1") {
            if (toks.size() != 2) throw ParseError(line, "measurement takes one qubit");
            const int q = qubitArg(toks[1], line);
            if (measured[static_cast<std::size_t>(q)])
                throw ParseError(line, "duplicate measurement for qubit " + std::to_string(q));
            measured[static_cast<std::size_t>(q)] = true;
            MeasurementKind kind = MeasurementKind::Trace;
            if (head == "MEASX") kind = MeasurementKind::X;
            else if (head == "MEASY") kind = MeasurementKind::Y;
            else if (head == "MEASZ") kind = MeasurementKind::Z;
            else if (head == "PROJ0") kind = MeasurementKind::Proj0;
            else if (head == "PROJ1") kind = MeasurementKind::Proj1;
            c.setMeasurement(q, kind);
            ++li;
            continue;
        }

        if (head == "DEF") {
            if (toks.size() != 3) throw ParseError(line, "DEF takes a name and an arity");
            const std::string name = upper(toks[1]);
            if (builtinTable().count(name) || defByName.count(name))
                throw ParseError(line, "gate name '" + toks[1] + "' already defined");
            const int arity = parseInt(toks[2], line, "arity");
            if (arity != 1 && arity != 2) throw ParseError(line, "DEF arity must be 1 or 2");
            const int dim = arity == 1 ? 2 : 4;
            const std::size_t want = static_cast<std::size_t>(dim) * dim;
            std::vector<Complex> entries;
            entries.reserve(want);
            ++li;
            while (entries.size() < want && li < cur.lines.size()) {
                for (const auto& tok : cur.lines[li]) {
                    if (entries.size() == want)
                        throw ParseError(cur.lineNo[li], "too many matrix entries in DEF block");
                    entries.push_back(parseComplexPair(tok, cur.lineNo[li]));
                }
                ++li;
            }
            if (entries.size() < want)
                throw ParseError(cur.lineNo.back(), "DEF block ended before matrix was complete");
            GateDef def{name, arity, SqMatrix(dim, std::move(entries))};
            try {
                defByName[name] = c.addDef(std::move(def));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line, e.what());
            }
            continue;
        }

        // gate application: <GATE> [<float-param>] <q> [<q2>]
        int arity = 0, nparams = 0;
        GateKind kind = GateKind::Custom;
        int defIndex = -1;
        if (const auto it = builtinTable().find(head); it != builtinTable().end()) {
            kind = it->second.kind;
            arity = it->second.arity;
            nparams = it->second.params;
        } else if (const auto dit = defByName.find(head); dit != defByName.end()) {
            defIndex = dit->second;
            arity = c.defs[static_cast<std::size_t>(defIndex)].arity;
        } else {
            throw ParseError(line, "unknown gate name '" + toks[0] + "'");
        }
        if (static_cast<int>(toks.size()) != 1 + nparams + arity)
            throw ParseError(line, "expected " + std::to_string(nparams) + " parameter(s) and " +
                                       std::to_string(arity) + " qubit(s) for " + head);
        std::vector<double> params;
        for (int p = 0; p < nparams; ++p) params.push_back(parseFloat(toks[1 + p], line));
        const int q0 = qubitArg(toks[1 + nparams], line);
        int q1 = -1;
        if (arity == 2) {
            q1 = qubitArg(toks[2 + nparams], line);
            if (q0 == q1) throw ParseError(line, "duplicate qubit in two-qubit gate");
        }
        try {
            if (defIndex >= 0) {
                c.addCustom(defIndex, q0, q1);
            } else if (arity == 1 && nparams == 0) {
                c.addGate(kind, q0);
            } else if (arity == 1) {
                c.addGate(kind, params[0], q0);
            } else if (nparams == 0) {
                c.addGate(kind, q0, q1);
            } else {
                c.addGate(kind, params[0], q0, q1);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
        ++li;
    }
    return c;
}

std::string serializeCircuit(const Circuit& c) {
    if (c.hasKrausNodes())
        throw std::invalid_argument("circuits with Kraus nodes have no text representation");
    std::ostringstream out;
    out.precision(17);
    out << c.numQubits << '\n';
    for (const auto& def : c.defs) {
        out << "DEF " << def.name << ' ' << def.arity << '\n';
        const int dim = def.matrix.dim();
        for (int r = 0; r < dim; ++r) {
            for (int col = 0; col < dim; ++col) {
                const Complex v = def.matrix.at(r, col);
                out << (col ? " " : "") << v.real() << ',' << v.imag();
            }
            out << '\n';
        }
    }
    for (const auto& op : c.ops) {
        if (op.kind == GateKind::Custom) {
            out << c.defs[static_cast<std::size_t>(op.defIndex)].name;
        } else {
            out << gateName(op.kind);
        }
        for (double p : op.params) out << ' ' << p;
        out << ' ' << op.qubit0;
        if (op.qubit1 >= 0) out << ' ' << op.qubit1;
        out << '\n';
    }
    for (int q = 0; q < c.numQubits; ++q) {
        switch (c.measurements[static_cast<std::size_t>(q)]) {
            case MeasurementKind::Trace: out << "MEAST "; break;
            case MeasurementKind::X: out << "MEASX "; break;
            case MeasurementKind::Y: out << "MEASY "; break;
            case MeasurementKind::Z: out << "MEASZ "; break;
            case MeasurementKind::Proj0: out << "PROJ0 "; break;
            case MeasurementKind::Proj1: out << "PROJ1 "; break;
        }
        out << q << '\n';
    }
    return out.str();
}

}  // namespace qtns
