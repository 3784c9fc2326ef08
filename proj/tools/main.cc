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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diagclimb/families.h"
#include "diagclimb/gen_coeff.h"
#include "diagclimb/hierarchy.h"
#include "diagclimb/json_io.h"
#include "diagclimb/oracle.h"
#include "diagclimb/synth.h"

using namespace diagclimb;
using nlohmann::json;

namespace {

constexpr int kExitPreserved = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotPreserved = 3;
constexpr int kExitSampledOnly = 4;
constexpr int kExitInadmissible = 5;
constexpr uint64_t kDefaultSeed = 20260101;
// Random checks per kind when the full check exceeds the budget.
constexpr int kFallbackSamples = 100;

struct Options {
    std::string code_path;
    std::string gate_path;
    std::string script_path;
    std::string in_path;
    std::string out_path;
    std::string gate_out_path;
    std::string script_out_path;
    std::string lift = "next_level_rotation";
    std::string w0;
    std::string x0;
    std::string tmpl;
    std::string family;
    std::vector<int> params;
    int budget = kDefaultBudgetLog2;
    int wmax = kDefaultWMax;
    int sampled = 0;
    uint64_t seed = kDefaultSeed;
    bool strict = false;
    bool oracle = false;
    double tol = kOracleTolerance;
};

EngineOptions engine(const Options &o) {
    EngineOptions e;
    e.budget_log2 = o.budget;
    return e;
}

int int_param(const Options &o, size_t i) {
    if (i >= o.params.size()) {
        throw FormatError("family " + o.family + " needs " + std::to_string(i + 1) + " parameter(s)");
    }
    return o.params[i];
}

void emit(const json &j) {
    std::cout << j.dump(2) << "\n";
}

void maybe_write(const std::string &path, const json &j) {
    if (!path.empty()) {
        write_json_file(path, j);
    }
}

FamilyInstance build_family(const Options &o) {
    const std::string &f = o.family;
    auto want = [&](size_t count) {
        if (o.params.size() != count) {
            throw FormatError("family " + f + " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    try {
        if (f == "steane") {
            want(0);
            return steane_instance();
        }
        if (f == "four22") {
            want(0);
            return {"four22", four22_code(), DiagonalGate::transversal_zrot(4, 2)};
        }
        if (f == "two_l") {
            want(1);
            return family_2l_l_2(int_param(o, 0), engine(o));
        }
        if (f == "tri2") {
            want(1);
            return triorthogonal_2(int_param(o, 0), engine(o));
        }
        if (f == "pqrm") {
            want(1);
            int l = int_param(o, 0);
            CssCode c = punctured_qrm(l);
            return {"pqrm", c, DiagonalGate::transversal_zrot(c.n(), l)};
        }
        if (f == "qrm") {
            want(2);
            int r = int_param(o, 0);
            int m = int_param(o, 1);
            CssCode c = qrm_code(r, m);
            if (m % r == 0) {
                return {"qrm", c, DiagonalGate::transversal_zrot(c.n(), m / r)};
            }
            return {"qrm", c, DiagonalGate::identity(c.n())};
        }
        if (f == "qrm_pipeline") {
            want(2);
            auto res = qrm_pipeline(int_param(o, 0), int_param(o, 1), engine(o));
            maybe_write(o.script_out_path, script_to_json(res.script));
            return {"qrm_pipeline", res.milestones.back(), res.final_gate};
        }
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    throw FormatError("unknown family \"" + f + "\"");
}

std::string params_string(const CssCode &code, const CodeDistances &d) {
    size_t dist = std::min(d.d_x.weight, d.d_z.weight);
    // A bound on the smaller side is exact once the other side is known to be no smaller.
    bool exact = (d.d_x.exact && d.d_z.exact) || (d.d_x.exact && d.d_x.weight <= d.d_z.weight) ||
                 (d.d_z.exact && d.d_z.weight <= d.d_x.weight);
    return "[[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + "," + (exact ? "" : ">=") +
           std::to_string(dist) + "]]";
}

json code_summary(const CssCode &code, const Options &o) {
    json out = {{"n", code.n()}, {"k", code.k()}, {"params", code.params()}};
    if (code.k() > 0) {
        auto d = distances(code, o.wmax, o.budget);
        out["d_x"] = weight_to_json(d.d_x);
        out["d_z"] = weight_to_json(d.d_z);
        out["params"] = params_string(code, d);
    }
    return out;
}

std::string params_with_distance(const CssCode &code, const Options &o) {
    if (code.k() == 0) {
        return code.params();
    }
    return params_string(code, distances(code, o.wmax, o.budget));
}

json logical_report(const CssCode &code, const DiagonalGate &gate, const Options &o) {
    LogicalDiagonal ld = induced_logical(code, gate, engine(o));
    PhasePolynomial p = phase_polynomial(ld.level, ld.exps);
    json out = {{"description", describe(p)}, {"level", hierarchy_level(p)}};
    if (!o.tmpl.empty()) {
        GateTemplate t = parse_template(o.tmpl, code.k());
        std::vector<MatchOptions> tries = {{true, false, false}};
        if (code.k() <= 6) {
            tries.push_back({true, true, false});
            tries.push_back({true, true, true});
        } else {
            tries.push_back({true, false, true});
        }
        GateMatch m;
        for (const auto &mo : tries) {
            m = match(ld.level, ld.exps, t, mo);
            if (m.matched) {
                break;
            }
        }
        json mj = {{"template", o.tmpl}, {"matched", m.matched}};
        if (m.matched) {
            mj["global_phase"] = phase_string(m.global_phase, m.phase_level);
            mj["pauli_z_mask"] = m.pauli_z_mask.str();
            mj["pauli_x_mask"] = m.pauli_x_mask.str();
            if (m.basis_change) {
                json rows = json::array();
                for (auto r : *m.basis_change) {
                    rows.push_back(BitVec::from_mask(code.k(), r).str());
                }
                mj["basis_change"] = rows;
            }
        }
        out["match"] = mj;
    }
    return out;
}

json oracle_report(const CssCode &code, const DiagonalGate &gate, const Options &o) {
    CrosscheckReport r = crosscheck(code, gate, o.tol, engine(o));
    return {
        {"ok", r.ok()},
        {"oracle_unitary", r.oracle_unitary},
        {"exact_preserved", r.exact_preserved},
        {"unitarity_deviation", r.unitarity_deviation},
        {"diagonal_deviation", r.diagonal_deviation},
        {"offdiagonal_max", r.offdiagonal_max},
        {"row_deviation", r.row_deviation},
        {"witness", r.witness},
    };
}

// Builds the verification report and its exit code.
int verify_report(const CssCode &code, const DiagonalGate &gate, const Options &o, json &rep) {
    if (gate.n() != code.n()) {
        throw FormatError("gate acts on " + std::to_string(gate.n()) + " qubits but the code has " +
                          std::to_string(code.n()));
    }
    rep["inputs"] = {
        {"code", code_to_json(code)},
        {"gate", gate_to_json(gate)},
        {"options", {{"budget", o.budget}, {"wmax", o.wmax}, {"sampled", o.sampled}, {"seed", o.seed}, {"template", o.tmpl}}},
    };
    rep["code"] = code_summary(code, o);
    rep["gate"] = gate.describe();
    int samples = o.sampled;
    Preservation p;
    if (samples == 0) {
        try {
            p = is_preserved(code, gate, engine(o));
        } catch (const BudgetExceeded &e) {
            rep["full_check"] = e.what();
            samples = kFallbackSamples;
        }
    }
    if (samples > 0) {
        auto cert = sampled_certificate(code, gate, o.seed, (size_t)samples, (size_t)samples, engine(o));
        rep["mode"] = "exact-sampled";
        rep["certificate"] = {
            {"passed", cert.passed()},
            {"generator_checks", cert.generator_checks},
            {"generator_failures", cert.generator_failures},
            {"random_checks", cert.random_checks},
            {"random_failures", cert.random_failures},
            {"zero_checks", cert.zero_checks},
            {"zero_failures", cert.zero_failures},
            {"predicted_degree", cert.predicted_degree},
            {"predicted_level", cert.predicted_level},
        };
        return cert.passed() ? kExitSampledOnly : kExitNotPreserved;
    }
    rep["mode"] = "exact-full";
    rep["preserved"] = p.preserved;
    rep["norm"] = p.norm.str();
    rep["norm_float"] = p.norm.to_complex().real();
    if (code.k() <= 10) {
        rep["trivial_row"] = row_to_json(trivial_row(code, gate, engine(o)));
    }
    if (p.preserved) {
        rep["logical"] = logical_report(code, gate, o);
    }
    if (o.oracle && 2 * code.k() + code.x_stab().num_rows() <= (size_t)kOracleCapLog2) {
        rep["oracle"] = oracle_report(code, gate, o);
    }
    return p.preserved ? kExitPreserved : kExitNotPreserved;
}

int run_family(const Options &o) {
    FamilyInstance f = build_family(o);
    maybe_write(o.out_path, code_to_json(f.code));
    maybe_write(o.gate_out_path, gate_to_json(f.gate));
    std::cerr << f.name << ": " << params_with_distance(f.code, o) << "\n";
    emit({{"family", f.name}, {"code", code_summary(f.code, o)}, {"gate", gate_to_json(f.gate)}, {"code_json", code_to_json(f.code)}});
    return 0;
}

int run_verify(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    DiagonalGate gate = gate_from_json(read_json_file(o.gate_path));
    json rep;
    int rc = verify_report(code, gate, o, rep);
    emit(rep);
    return rc;
}

int run_report(const Options &o) {
    json in = read_json_file(o.in_path);
    const json &inputs = in.at("inputs");
    Options again = o;
    const json &opts = inputs.at("options");
    again.budget = opts.at("budget").get<int>();
    again.wmax = opts.at("wmax").get<int>();
    again.sampled = opts.at("sampled").get<int>();
    again.seed = opts.at("seed").get<uint64_t>();
    again.tmpl = opts.at("template").get<std::string>();
    CssCode code = code_from_json(inputs.at("code"));
    DiagonalGate gate = gate_from_json(inputs.at("gate"));
    json rep;
    int rc = verify_report(code, gate, again, rep);
    emit(rep);
    return rc;
}

int run_concat(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    LiftPolicy policy;
    try {
        policy = parse_lift_policy(o.lift);
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    CssCode out = concatenate(code);
    json rep = {{"code", code_summary(out, o)}, {"code_json", code_to_json(out)}};
    maybe_write(o.out_path, code_to_json(out));
    if (!o.gate_path.empty()) {
        DiagonalGate g = lift(gate_from_json(read_json_file(o.gate_path)), policy);
        rep["gate"] = gate_to_json(g);
        maybe_write(o.gate_out_path, gate_to_json(g));
    }
    emit(rep);
    return 0;
}

BitVec parse_bits(const std::string &s, size_t n, const char *what) {
    BitVec v;
    try {
        v = BitVec::from_str(s);
    } catch (const std::invalid_argument &e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
    if (v.size() != n) {
        throw FormatError(std::string(what) + " must have length " + std::to_string(n));
    }
    return v;
}

int run_remove_z(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    DiagonalGate gate = gate_from_json(read_json_file(o.gate_path));
    RemoveZResult r = remove_z(code, gate, parse_bits(o.w0, code.n(), "w0"), engine(o));
    maybe_write(o.out_path, code_to_json(r.code));
    emit({{"code", code_summary(r.code, o)},
          {"code_json", code_to_json(r.code)},
          {"w0", r.w0.str()},
          {"gamma0", r.gamma0.str()},
          {"admissible", r.admissible},
          {"checked", r.checked},
          {"norm", r.norm.str()}});
    return (o.strict && r.checked && !r.admissible) ? kExitInadmissible : 0;
}

int run_add_x(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    DiagonalGate gate = gate_from_json(read_json_file(o.gate_path));
    AddXResult r = add_x(code, gate, parse_bits(o.x0, code.n(), "x0"), engine(o));
    maybe_write(o.out_path, code_to_json(r.code));
    json rep = {{"code", code_summary(r.code, o)},
                {"code_json", code_to_json(r.code)},
                {"x0", r.x0.str()},
                {"mu0", r.mu0.str()},
                {"admissible", r.admissible},
                {"checked", r.checked}};
    if (r.witness) {
        rep["witness"] = {{"gamma", code.z_logical(r.witness->first).str()}, {"value", r.witness->second.str()}};
    }
    emit(rep);
    return (o.strict && r.checked && !r.admissible) ? kExitInadmissible : 0;
}

int run_pipeline_cmd(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    DiagonalGate gate = gate_from_json(read_json_file(o.gate_path));
    std::vector<PipelineOp> ops = script_from_json(read_json_file(o.script_path), code.n());
    PipelineOptions popt;
    popt.engine = engine(o);
    popt.strict = o.strict;
    std::vector<SynthStep> log;
    json rep;
    int rc = 0;
    try {
        run_pipeline(code, gate, ops, popt, log);
    } catch (const InadmissibleStep &e) {
        rep["error"] = e.what();
        rc = kExitInadmissible;
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    json steps = json::array();
    for (const auto &s : log) {
        steps.push_back(step_to_json(s));
    }
    rep["steps"] = steps;
    rep["final_code"] = code_summary(code, o);
    rep["final_code_json"] = code_to_json(code);
    rep["final_gate"] = gate_to_json(gate);
    if (rc == 0) {
        json ver;
        Options vo = o;
        vo.sampled = 0;
        try {
            verify_report(code, gate, vo, ver);
            ver.erase("inputs");
            rep["final"] = ver;
        } catch (const BudgetExceeded &e) {
            rep["final"] = {{"error", e.what()}};
        }
    }
    maybe_write(o.out_path, code_to_json(code));
    maybe_write(o.gate_out_path, gate_to_json(gate));
    emit(rep);
    return rc;
}

int run_oracle(const Options &o) {
    CssCode code = code_from_json(read_json_file(o.code_path));
    DiagonalGate gate = gate_from_json(read_json_file(o.gate_path));
    json rep = oracle_report(code, gate, o);
    emit(rep);
    return rep["ok"].get<bool>() ? 0 : kExitNotPreserved;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"diagclimb: generator coefficients and synthesis for CSS codes under diagonal gates"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *c) {
        c->add_option("--budget", o.budget, "log2 enumeration budget")->check(CLI::Range(1, 40));
        c->add_option("--wmax", o.wmax, "weight bound for bounded distance search")->check(CLI::Range(1, 16));
    };
    auto add_code_gate = [&](CLI::App *c, bool gate_required) {
        c->add_option("--code", o.code_path, "code JSON")->required();
        auto g = c->add_option("--gate", o.gate_path, "gate JSON");
        if (gate_required) {
            g->required();
        }
    };

    auto *family = app.add_subcommand("family", "build a named code family");
    family->add_option("name", o.family, "steane | four22 | two_l l | tri2 l | pqrm l | qrm r m | qrm_pipeline r m")
        ->required();
    family->add_option("params", o.params, "integer parameters");
    family->add_option("--out", o.out_path, "write code JSON");
    family->add_option("--gate-out", o.gate_out_path, "write the family's gate JSON");
    family->add_option("--script-out", o.script_out_path, "qrm_pipeline only: write the executed script");
    add_common(family);

    auto *verify = app.add_subcommand("verify", "decide preservation and identify the logical gate");
    add_code_gate(verify, true);
    verify->add_option("--sampled", o.sampled, "exact-sampled certificate with N random checks")->check(CLI::Range(1, 100000));
    verify->add_option("--seed", o.seed, "seed for sampled checks");
    verify->add_option("--template", o.tmpl, "gate template to match, e.g. \"T†[0] T†[1]\"");
    verify->add_flag("--oracle", o.oracle, "append the statevector crosscheck");
    add_common(verify);

    auto *report = app.add_subcommand("report", "re-run a verification report from its embedded inputs");
    report->add_option("--in", o.in_path, "report JSON")->required();
    report->add_flag("--oracle", o.oracle, "append the statevector crosscheck");

    auto *concat = app.add_subcommand("concat", "concatenate a code and lift its gate");
    add_code_gate(concat, false);
    concat->add_option("--lift", o.lift, "identity_tensor | next_level_rotation | qfd_tensor");
    concat->add_option("--out", o.out_path, "write code JSON");
    concat->add_option("--gate-out", o.gate_out_path, "write lifted gate JSON");
    add_common(concat);

    auto *remove = app.add_subcommand("remove-z", "remove a Z-stabilizer by adding w0 to C1");
    add_code_gate(remove, true);
    remove->add_option("--w0", o.w0, "new X-logical bit string")->required();
    remove->add_option("--out", o.out_path, "write code JSON");
    remove->add_flag("--strict", o.strict, "exit 5 when inadmissible");
    add_common(remove);

    auto *addx = app.add_subcommand("add-x", "add an X-stabilizer x0 to C2");
    add_code_gate(addx, true);
    addx->add_option("--x0", o.x0, "X-logical bit string to stabilize")->required();
    addx->add_option("--out", o.out_path, "write code JSON");
    addx->add_flag("--strict", o.strict, "exit 5 when inadmissible");
    add_common(addx);

    auto *pipeline = app.add_subcommand("pipeline", "run a synthesis script");
    add_code_gate(pipeline, true);
    pipeline->add_option("--script", o.script_path, "pipeline script JSON")->required();
    pipeline->add_option("--template", o.tmpl, "gate template for the final identification");
    pipeline->add_option("--out", o.out_path, "write final code JSON");
    pipeline->add_option("--gate-out", o.gate_out_path, "write final gate JSON");
    pipeline->add_flag("--strict", o.strict, "stop with exit 5 at the first inadmissible step");
    pipeline->add_flag("--oracle", o.oracle, "append the statevector crosscheck for the final code");
    add_common(pipeline);

    auto *oracle = app.add_subcommand("oracle", "statevector crosscheck of the exact engine");
    add_code_gate(oracle, true);
    oracle->add_option("--tol", o.tol, "absolute tolerance");
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*family) {
            return run_family(o);
        }
        if (*verify) {
            return run_verify(o);
        }
        if (*report) {
            return run_report(o);
        }
        if (*concat) {
            return run_concat(o);
        }
        if (*remove) {
            return run_remove_z(o);
        }
        if (*addx) {
            return run_add_x(o);
        }
        if (*pipeline) {
            return run_pipeline_cmd(o);
        }
        if (*oracle) {
            return run_oracle(o);
        }
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
