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

#include "diagclimb/families.h"

#include <random>
#include <stdexcept>

#include "diagclimb/hierarchy.h"
#include "diagclimb/walk.h"

namespace diagclimb {

BitMat rm_generator(int r, int m) {
    if (m < 0 || m > 20 || r > m) {
        throw std::invalid_argument("rm_generator: need 0 <= r <= m <= 20");
    }
    size_t n = size_t{1} << m;
    if (r < 0) {
        return BitMat(n);
    }
    if (r == 0) {
        BitMat out(n);
        out.push_back(BitVec::ones(n));
        return out;
    }
    if (r == m) {
        return BitMat::identity(n);
    }
    BitMat a = rm_generator(r, m - 1);
    BitMat b = rm_generator(r - 1, m - 1);
    size_t h = n / 2;
    BitMat out(n);
    for (const auto &u : a.rows()) {
        out.push_back(u.concat(u));
    }
    for (const auto &v : b.rows()) {
        out.push_back(BitVec(h).concat(v));
    }
    return out;
}

CssCode qrm_code(int r, int m) {
    if (r < 1 || r >= m) {
        throw std::invalid_argument("qrm_code: need 1 <= r < m");
    }
    size_t n = size_t{1} << m;
    return CssCode(n, rm_generator(r - 1, m), rm_generator(m - r - 1, m));
}

namespace {

// Codewords vanishing at coordinate 0, with that coordinate deleted.
BitMat shortened(const BitMat &g) {
    auto [rows, pivots] = rref(g);
    BitMat out(g.cols() - 1);
    for (size_t i = 0; i < rows.num_rows(); i++) {
        if (pivots[i] == 0) {
            continue;
        }
        out.push_back(rows[i].slice(1, g.cols() - 1));
    }
    return out;
}

}  // namespace

CssCode punctured_qrm(int l) {
    if (l < 2 || l > 12) {
        throw std::invalid_argument("punctured_qrm: need 2 <= l <= 12");
    }
    size_t n = (size_t{1} << (l + 1)) - 1;
    return CssCode(n, shortened(rm_generator(1, l + 1)), shortened(rm_generator(l - 1, l + 1)));
}

CssCode steane_code() {
    BitMat h = BitMat::from_strs({"1111000", "1100110", "1010101"});
    return CssCode(7, h, h);
}

CssCode four22_code() {
    BitMat s = BitMat::from_strs({"1111"});
    return CssCode(4, s, s);
}

FamilyInstance steane_instance() {
    return {"steane", steane_code(), DiagonalGate::transversal_zrot(7, 2)};
}

FamilyInstance qrm_instance(int r, int m) {
    if (m % r != 0) {
        throw std::invalid_argument("qrm_instance: the rotation gate needs r | m");
    }
    size_t n = size_t{1} << m;
    return {"qrm(" + std::to_string(r) + "," + std::to_string(m) + ")", qrm_code(r, m),
            DiagonalGate::transversal_zrot(n, m / r)};
}

FamilyInstance family_2l_l_2(int l, EngineOptions opt) {
    if (l < 2 || l > 7) {
        throw std::invalid_argument("family_2l_l_2: need 2 <= l <= 7");
    }
    CssCode code = four22_code();
    DiagonalGate gate = DiagonalGate::transversal_zrot(4, 2);
    for (int i = 3; i <= l; i++) {
        code = concatenate(code);
        gate = lift(gate, LiftPolicy::kNextLevelRotation);
        code = theorem2_remove(code, gate, opt).code;
    }
    return {"two_l(" + std::to_string(l) + ")", code, gate};
}

std::vector<Cyclo> two_l_expected_row(int l) {
    size_t count = size_t{1} << l;
    std::vector<Cyclo> row(count, Cyclo::dyadic(-1, l - 1));
    row[0] = Cyclo::dyadic((BigInt(1) << (l - 1)) - 1, l - 1);
    return row;
}

FamilyInstance triorthogonal_2(int l, EngineOptions opt) {
    CssCode base = punctured_qrm(l);
    CssCode c = concatenate(base);
    DiagonalGate gate = DiagonalGate::transversal_zrot(c.n(), l + 1);
    auto r = theorem2_remove(c, gate, opt);
    return {"tri2(" + std::to_string(l) + ")", r.code, gate};
}

QrmPipelineResult qrm_pipeline(int r, int m, EngineOptions opt, bool with_distances) {
    if (r < 1 || r >= m || m % r != 0) {
        throw std::invalid_argument("qrm_pipeline: need 1 <= r < m and r | m");
    }
    int h = r + m / r + 1;
    int m2 = m + h;
    if (m2 > 12) {
        throw std::invalid_argument("qrm_pipeline: target length too large");
    }
    QrmPipelineResult res;
    CssCode code = qrm_code(r, m);
    DiagonalGate gate = DiagonalGate::transversal_zrot(code.n(), m / r);
    res.milestones.push_back(code);
    PipelineOptions popt;
    popt.engine = opt;
    popt.distances = with_distances;

    std::vector<PipelineOp> concat_ops(h, PipelineOp::concat(LiftPolicy::kNextLevelRotation));
    for (auto &op : concat_ops) {
        if (gate.level() >= Cyclo::kMaxLevel) {
            op.lift = LiftPolicy::kIdentityTensor;
        }
        run_pipeline(code, gate, {op}, popt, res.steps);
        res.script.push_back(op);
        res.concatenations++;
    }
    res.milestones.push_back(code);

    // Retarget to the rotation of the destination code, then confirm it preserves.
    PipelineOp retarget = PipelineOp::set_gate(DiagonalGate::transversal_zrot(code.n(), m2 / (r + 1)));
    run_pipeline(code, gate, {retarget, PipelineOp{}}, popt, res.steps);
    res.script.push_back(retarget);
    res.script.push_back(PipelineOp{});

    BitMat removals = quotient_basis(rm_generator(r + 1, m2), code.c1());
    std::vector<PipelineOp> ops;
    for (const auto &w0 : removals.rows()) {
        ops.push_back(PipelineOp::remove_z(w0));
    }
    run_pipeline(code, gate, ops, popt, res.steps);
    res.script.insert(res.script.end(), ops.begin(), ops.end());
    res.removals = (int)ops.size();
    res.milestones.push_back(code);

    BitMat additions = quotient_basis(rm_generator(r, m2), code.x_stab());
    ops.clear();
    for (const auto &x0 : additions.rows()) {
        ops.push_back(PipelineOp::add_x(x0));
    }
    run_pipeline(code, gate, ops, popt, res.steps);
    res.script.insert(res.script.end(), ops.begin(), ops.end());
    res.additions = (int)ops.size();
    res.milestones.push_back(code);
    res.final_gate = gate;
    return res;
}

SampledCertificate sampled_certificate(
    const CssCode &code,
    const DiagonalGate &gate,
    uint64_t seed,
    size_t random_gammas,
    size_t random_zeros,
    EngineOptions opt) {
    size_t k = code.k();
    if (k == 0 || k > 24) {
        throw std::invalid_argument("sampled_certificate: need 1 <= k <= 24");
    }
    SampledCertificate cert;
    // Predicted diagonal D(beta) = d_{beta H + y} and its transform.
    RawTable pred;
    pred.level = gate.level();
    pred.width = size_t{1} << (gate.level() - 1);
    pred.count = size_t{1} << k;
    pred.data.assign(pred.count * pred.width, 0);
    std::vector<int64_t> exps(pred.count);
    for (uint64_t b = 0; b < pred.count; b++) {
        exps[b] = gate.entry_exponent(code.x_logical(b) ^ code.y());
        pred.add_root(b, exps[b], false);
    }
    PhasePolynomial poly = phase_polynomial(gate.level(), exps);
    for (auto [mono, c] : poly.coeffs) {
        cert.predicted_degree = std::max(cert.predicted_degree, (int)std::popcount(mono));
    }
    cert.predicted_level = hierarchy_level(poly);
    pred.walsh_hadamard();

    EngineOptions single = opt;
    single.side = Side::kAuto;
    BitVec zero(code.n());
    auto check_alpha = [&](uint64_t a) {
        Cyclo got = coefficient(code, gate, zero, code.z_logical(a), single);
        return got == pred.value(a, (int)k);
    };
    for (size_t i = 0; i < k; i++) {
        cert.generator_checks++;
        if (!check_alpha(uint64_t{1} << i)) {
            cert.generator_failures++;
        }
    }
    std::mt19937_64 rng(seed);
    uint64_t amask = (uint64_t{1} << k) - 1;
    for (size_t i = 0; i < random_gammas; i++) {
        cert.random_checks++;
        if (!check_alpha(rng() & amask)) {
            cert.random_failures++;
        }
    }
    size_t s = code.frame().syndrome_basis.num_rows();
    if (s > 0) {
        uint64_t smask = s >= 64 ? ~uint64_t{0} : (uint64_t{1} << s) - 1;
        for (size_t i = 0; i < random_zeros; i++) {
            uint64_t t = 0;
            while (t == 0) {
                t = rng() & smask;
            }
            BitVec mu = code.frame().syndrome_basis.combine(t);
            BitVec g = code.z_logical(rng() & amask);
            cert.zero_checks++;
            if (!coefficient(code, gate, mu, g, single).is_zero()) {
                cert.zero_failures++;
            }
        }
    }
    return cert;
}

}  // namespace diagclimb
