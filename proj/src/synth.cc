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

#include "diagclimb/synth.h"

#include <algorithm>
#include <map>

namespace diagclimb {

namespace {

BitMat doubled(const BitMat &m) {
    BitMat out(2 * m.cols());
    for (const auto &r : m.rows()) {
        out.push_back(r.concat(r));
    }
    return out;
}

std::string alpha_str(uint64_t a, size_t k) {
    return BitVec::from_mask(std::min<size_t>(k, 64), a).str();
}

}  // namespace

CssCode concatenate(const CssCode &code) {
    BitMat c1 = doubled(code.c1());
    return CssCode(2 * code.n(), doubled(code.x_stab()), dual_basis(c1), code.y().concat(code.y()));
}

RemoveZResult remove_z(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt) {
    if (w0.size() != code.n()) {
        throw LengthMismatch("remove_z: w0 length differs from n");
    }
    if (contains(code.c1(), w0)) {
        throw std::invalid_argument("remove_z: w0 lies in C1");
    }
    BitMat c1 = code.c1();
    c1.push_back(w0);
    BitMat z_new = dual_basis(c1);
    CssCode out(code.n(), code.x_stab(), z_new, code.y());
    BitVec gamma0;
    for (const auto &r : code.z_stab().rows()) {
        if (r.dot(w0)) {
            gamma0 = Reducer(z_new).reduce(r);
            break;
        }
    }
    RemoveZResult res{std::move(out), w0, gamma0, false, false, Cyclo()};
    try {
        res.norm = split_norm(code, gate, w0, opt);
        res.checked = true;
        res.admissible = res.norm == Cyclo::one();
    } catch (const BudgetExceeded &) {
        res.checked = false;
    }
    return res;
}

RemoveZResult theorem2_remove(const CssCode &code, const DiagonalGate &gate, EngineOptions opt) {
    size_t n = code.n();
    if (n % 2 != 0) {
        throw std::invalid_argument("theorem2_remove: code length must be even");
    }
    BitVec w0 = BitVec::ones(n / 2).concat(BitVec(n / 2));
    return remove_z(code, gate, w0, opt);
}

CssCode add_z(const CssCode &code, const BitVec &gamma0) {
    if (contains(code.z_stab(), gamma0)) {
        throw std::invalid_argument("add_z: gamma0 is already a Z-stabilizer");
    }
    BitMat z = code.z_stab();
    z.push_back(gamma0);
    return CssCode(code.n(), code.x_stab(), z, code.y());
}

AddXResult add_x(const CssCode &code, const DiagonalGate &gate, const BitVec &x0, EngineOptions opt) {
    if (x0.size() != code.n()) {
        throw LengthMismatch("add_x: x0 length differs from n");
    }
    if (!contains(code.c1(), x0) || contains(code.x_stab(), x0)) {
        throw std::invalid_argument("add_x: x0 must lie in C1 but not in C2");
    }
    BitMat x = code.x_stab();
    x.push_back(x0);
    CssCode out(code.n(), x, code.z_stab(), code.y());
    BitVec mu0;
    for (const auto &g : code.frame().z_logical_basis.rows()) {
        if (g.dot(x0)) {
            mu0 = Reducer(out.c2_perp()).reduce(g);
            break;
        }
    }
    AddXResult res{std::move(out), x0, mu0, false, false, std::nullopt};
    try {
        res.witness = addition_witness(code, gate, x0, opt);
        res.checked = true;
        res.admissible = !res.witness.has_value();
    } catch (const BudgetExceeded &) {
        res.checked = false;
    }
    return res;
}

CssCode remove_x(const CssCode &code, const BitVec &mu0) {
    const auto &rows = code.x_stab().rows();
    auto pivot = std::find_if(rows.begin(), rows.end(), [&](const BitVec &r) { return r.dot(mu0); });
    if (pivot == rows.end()) {
        throw std::invalid_argument("remove_x: mu0 is orthogonal to every X-stabilizer");
    }
    BitMat kept(code.n());
    for (const auto &r : rows) {
        if (&r == &*pivot) {
            continue;
        }
        kept.push_back(r.dot(mu0) ? r ^ *pivot : r);
    }
    return CssCode(code.n(), kept, code.z_stab(), code.y());
}

DfsSwitch dfs_switch(const CssCode &code) {
    size_t n = code.n();
    BitVec vertices(n);
    for (const auto &r : code.x_stab().rows()) {
        vertices |= r;
    }
    // e_i + e_j is a Z-stabilizer iff e_i and e_j reduce to the same vector.
    Reducer red(code.z_stab());
    std::map<BitVec, std::vector<size_t>> classes;
    for (size_t q : vertices.support()) {
        classes[red.reduce(BitVec::unit(n, q))].push_back(q);
    }
    std::vector<std::vector<size_t>> comps;
    for (auto &[key, qs] : classes) {
        comps.push_back(qs);
    }
    std::sort(comps.begin(), comps.end());
    BitVec y2(n);
    for (const auto &c : comps) {
        if (c.size() % 2 != 0) {
            throw OddComponent("qubit component starting at " + std::to_string(c[0]) + " has odd size " +
                               std::to_string(c.size()));
        }
        for (size_t i = 0; i < c.size() / 2; i++) {
            y2.set(c[i], true);
        }
    }
    return {y2, code.y() ^ y2};
}

CodeSummary summarize(const CssCode &code, bool with_distances, int w_max, int budget_log2) {
    CodeSummary s;
    s.n = code.n();
    s.k = code.k();
    if (with_distances && code.k() > 0) {
        auto d = distances(code, w_max, budget_log2);
        s.d_x = d.d_x;
        s.d_z = d.d_z;
    }
    return s;
}

void run_pipeline(
    CssCode &code,
    DiagonalGate &gate,
    const std::vector<PipelineOp> &ops,
    const PipelineOptions &opt,
    std::vector<SynthStep> &log) {
    for (const auto &op : ops) {
        SynthStep step;
        step.before = summarize(code, opt.distances, opt.w_max, opt.engine.budget_log2);
        switch (op.kind) {
            case PipelineOp::Kind::kConcat: {
                step.kind = "concat";
                step.parameter = lift_policy_name(op.lift);
                DiagonalGate lifted = lift(gate, op.lift);
                code = concatenate(code);
                gate = std::move(lifted);
                break;
            }
            case PipelineOp::Kind::kRemoveZ: {
                step.kind = "remove_z";
                step.parameter = op.vec.str();
                auto r = remove_z(code, gate, op.vec, opt.engine);
                step.admissible = r.admissible;
                step.checked = r.checked;
                step.witness = r.checked ? "norm " + r.norm.str() : "budget exceeded";
                code = std::move(r.code);
                break;
            }
            case PipelineOp::Kind::kAddX: {
                step.kind = "add_x";
                step.parameter = op.vec.str();
                auto r = add_x(code, gate, op.vec, opt.engine);
                step.admissible = r.admissible;
                step.checked = r.checked;
                if (!r.checked) {
                    step.witness = "budget exceeded";
                } else if (r.witness.has_value()) {
                    step.witness = "A_{0,g(" + alpha_str(r.witness->first, code.k() + 1) +
                                   ")} = " + r.witness->second.str();
                }
                code = std::move(r.code);
                break;
            }
            case PipelineOp::Kind::kSetGate: {
                step.kind = "set_gate";
                if (!op.gate || op.gate->n() != code.n()) {
                    throw std::invalid_argument("set_gate: gate must act on " + std::to_string(code.n()) + " qubits");
                }
                gate = *op.gate;
                step.parameter = gate.describe();
                break;
            }
            case PipelineOp::Kind::kVerify: {
                step.kind = "verify";
                try {
                    auto p = is_preserved(code, gate, opt.engine);
                    step.admissible = p.preserved;
                    step.witness = "norm " + p.norm.str();
                } catch (const BudgetExceeded &e) {
                    step.checked = false;
                    step.witness = e.what();
                }
                break;
            }
        }
        step.after = summarize(code, opt.distances, opt.w_max, opt.engine.budget_log2);
        log.push_back(step);
        if (opt.strict && step.checked && !step.admissible) {
            throw InadmissibleStep(step.kind + " step " + std::to_string(log.size()) + " is inadmissible");
        }
    }
}

}  // namespace diagclimb
