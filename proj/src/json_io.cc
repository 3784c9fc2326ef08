// Copyright 2026 The diagclimb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diagclimb/json_io.h"

#include <fstream>

namespace diagclimb {

using nlohmann::json;

namespace {

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) {
        throw FormatError(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

BitVec bits(const json &j, size_t n, const char *what) {
    if (!j.is_string()) {
        throw FormatError(std::string(what) + " must be a bit string");
    }
    BitVec v;
    try {
        v = BitVec::from_str(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
    if (v.size() != n) {
        throw FormatError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                          std::to_string(n));
    }
    return v;
}

BitMat bit_rows(const json &j, size_t n, const char *what) {
    if (!j.is_array()) {
        throw FormatError(std::string(what) + " must be an array of bit strings");
    }
    BitMat m(n);
    for (const auto &r : j) {
        m.push_back(bits(r, n, what));
    }
    return m;
}

size_t positive(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw FormatError(std::string(what) + " must be a positive integer");
    }
    return j.get<size_t>();
}

json local_to_json(const LocalDiag &d) {
    for (int controls = 0; controls + 1 <= kBlockCap; controls++) {
        if (controls + 1 != d.num_qubits) {
            continue;
        }
        for (bool dagger : {false, true}) {
            if (elementary_ckz(controls, d.level - 1, dagger) == d) {
                return {{"type", "CkZ"}, {"controls", controls}, {"root", d.level - 1}, {"dagger", dagger}};
            }
        }
    }
    if (d.num_qubits == 1 && d.level >= 2 && d == zrot_block(d.level - 1)) {
        return {{"type", "zrot"}, {"l", d.level - 1}};
    }
    return {{"type", "diag"}, {"level", d.level}, {"exps", d.exps}};
}

LocalDiag local_from_json(const json &j) {
    std::string type = field(j, "type").get<std::string>();
    if (type == "CkZ") {
        return elementary_ckz(
            field(j, "controls").get<int>(), field(j, "root").get<int>(), j.value("dagger", false));
    }
    if (type == "zrot") {
        return zrot_block(field(j, "l").get<int>());
    }
    if (type == "diag") {
        auto exps = field(j, "exps").get<std::vector<int64_t>>();
        int b = 0;
        while ((size_t{1} << b) < exps.size()) {
            b++;
        }
        return LocalDiag(b, field(j, "level").get<int>(), exps);
    }
    throw FormatError("unknown block gate type \"" + type + "\"");
}

}  // namespace

json code_to_json(const CssCode &code) {
    return {
        {"n", code.n()},
        {"x_stabilizers", code.x_stab().strs()},
        {"z_stabilizers", code.z_stab().strs()},
        {"y", code.y().str()},
    };
}

CssCode code_from_json(const json &j) {
    try {
        size_t n = positive(field(j, "n"), "n");
        BitVec y = j.contains("y") ? bits(j.at("y"), n, "y") : BitVec(n);
        return CssCode(n, bit_rows(field(j, "x_stabilizers"), n, "x_stabilizers"),
                       bit_rows(field(j, "z_stabilizers"), n, "z_stabilizers"), y);
    } catch (const json::exception &e) {
        throw FormatError(std::string("code JSON: ") + e.what());
    }
}

json gate_to_json(const DiagonalGate &gate) {
    if (gate.kind() == DiagonalGate::Kind::kQfd) {
        return {{"kind", "qfd"}, {"n", gate.n()}, {"l", gate.level()}, {"R", gate.qfd_matrix()}};
    }
    if (auto l = gate.zrot_angle()) {
        return {{"kind", "transversal_zrot"}, {"n", gate.n()}, {"l", *l}};
    }
    json blocks = json::array();
    for (const auto &b : gate.blocks()) {
        blocks.push_back({{"qubits", b.qubits}, {"gate", local_to_json(b.diag)}});
    }
    return {{"kind", "blocks"}, {"n", gate.n()}, {"blocks", blocks}};
}

DiagonalGate gate_from_json(const json &j) {
    try {
        std::string kind = field(j, "kind").get<std::string>();
        size_t n = positive(field(j, "n"), "n");
        if (kind == "transversal_zrot") {
            return DiagonalGate::transversal_zrot(n, field(j, "l").get<int>());
        }
        if (kind == "qfd") {
            return DiagonalGate::qfd(n, field(j, "l").get<int>(), field(j, "R").get<std::vector<std::vector<int64_t>>>());
        }
        if (kind == "blocks") {
            std::vector<DiagonalGate::Block> blocks;
            for (const auto &b : field(j, "blocks")) {
                blocks.push_back({field(b, "qubits").get<std::vector<size_t>>(), local_from_json(field(b, "gate"))});
            }
            return DiagonalGate::block_product(n, std::move(blocks));
        }
        throw FormatError("unknown gate kind \"" + kind + "\"");
    } catch (const json::exception &e) {
        throw FormatError(std::string("gate JSON: ") + e.what());
    } catch (const std::out_of_range &e) {
        throw FormatError(std::string("gate JSON: ") + e.what());
    }
}

json row_to_json(const GenCoeffRow &row) {
    json out = json::array();
    for (size_t i = 0; i < row.values.size(); i++) {
        out.push_back({{"gamma", row.gammas[i].str()}, {"value", row.values[i].str()}});
    }
    return out;
}

json weight_to_json(const WeightResult &w) {
    if (w.exact) {
        return {{"value", w.weight}, {"exact", true}};
    }
    return {{"lower_bound", w.weight}, {"exact", false}};
}

json summary_to_json(const CodeSummary &s) {
    json out = {{"n", s.n}, {"k", s.k}};
    if (s.d_x) {
        out["d_x"] = weight_to_json(*s.d_x);
    }
    if (s.d_z) {
        out["d_z"] = weight_to_json(*s.d_z);
    }
    return out;
}

json step_to_json(const SynthStep &s) {
    json out = {
        {"op", s.kind},
        {"admissible", s.admissible},
        {"checked", s.checked},
        {"before", summary_to_json(s.before)},
        {"after", summary_to_json(s.after)},
    };
    if (!s.parameter.empty()) {
        out["parameter"] = s.parameter;
    }
    if (!s.witness.empty()) {
        out["witness"] = s.witness;
    }
    return out;
}

std::vector<PipelineOp> script_from_json(const json &j, size_t n) {
    if (!j.is_array()) {
        throw FormatError("pipeline script must be a JSON array");
    }
    std::vector<PipelineOp> ops;
    size_t len = n;
    for (const auto &s : j) {
        std::string op = field(s, "op").get<std::string>();
        PipelineOp p;
        if (op == "concat") {
            p.kind = PipelineOp::Kind::kConcat;
            try {
                p.lift = parse_lift_policy(s.value("lift", std::string("next_level_rotation")));
            } catch (const std::invalid_argument &e) {
                throw FormatError(e.what());
            }
            len *= 2;
        } else if (op == "remove_z") {
            p.kind = PipelineOp::Kind::kRemoveZ;
            p.vec = bits(field(s, "w0"), len, "w0");
        } else if (op == "add_x") {
            p.kind = PipelineOp::Kind::kAddX;
            p.vec = bits(field(s, "x0"), len, "x0");
        } else if (op == "verify") {
            p.kind = PipelineOp::Kind::kVerify;
        } else if (op == "set_gate") {
            p.kind = PipelineOp::Kind::kSetGate;
            p.gate = gate_from_json(field(s, "gate"));
            if (p.gate->n() != len) {
                throw FormatError("set_gate: gate must act on " + std::to_string(len) + " qubits");
            }
        } else {
            throw FormatError("unknown pipeline op \"" + op + "\"");
        }
        ops.push_back(std::move(p));
    }
    return ops;
}

json script_to_json(const std::vector<PipelineOp> &ops) {
    json out = json::array();
    for (const auto &op : ops) {
        switch (op.kind) {
            case PipelineOp::Kind::kConcat:
                out.push_back({{"op", "concat"}, {"lift", lift_policy_name(op.lift)}});
                break;
            case PipelineOp::Kind::kRemoveZ:
                out.push_back({{"op", "remove_z"}, {"w0", op.vec.str()}});
                break;
            case PipelineOp::Kind::kAddX:
                out.push_back({{"op", "add_x"}, {"x0", op.vec.str()}});
                break;
            case PipelineOp::Kind::kVerify:
                out.push_back({{"op", "verify"}});
                break;
            case PipelineOp::Kind::kSetGate:
                out.push_back({{"op", "set_gate"}, {"gate", gate_to_json(*op.gate)}});
                break;
        }
    }
    return out;
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

}  // namespace diagclimb
