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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "diagclimb/families.h"
#include "diagclimb/hierarchy.h"
#include "diagclimb/oracle.h"
#include "diagclimb/synth.h"
#include "test_util.h"

using namespace diagclimb;
using namespace diagclimb::testing;

namespace {

// Pinned limits.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 10.0;
constexpr double kLimit3 = 5.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit5 = 60.0;
constexpr double kLimit6 = 600.0;
constexpr double kLimit7 = 120.0;
constexpr double kOracleTol = 1e-9;
constexpr int kPropertyCases = 1000;
constexpr uint64_t kSampleSeed = 20260101;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string &what) {
    if (!cond) {
        throw Failure(what);
    }
}

BitVec half_ones(size_t half) {
    return BitVec::ones(half).concat(BitVec(half));
}

GateMatch find_match(const LogicalDiagonal &l, const std::string &tmpl) {
    auto t = parse_template(tmpl, l.k);
    for (MatchOptions o : {MatchOptions{true, false, false}, MatchOptions{true, true, false}}) {
        auto m = match(l.level, l.exps, t, o);
        if (m.matched) {
            return m;
        }
    }
    return {};
}

int level_of(const LogicalDiagonal &l) {
    return hierarchy_level(phase_polynomial(l.level, l.exps));
}

// Full table of (code', gate') at [mu, 0], [gamma, 0] equals that of (code, gate),
// and the padded labels are a bijection onto the new table's labels.
void check_invariance(const CssCode &c, const DiagonalGate &g, LiftPolicy policy, size_t &entries) {
    size_t n = c.n();
    CssCode cc = concatenate(c);
    DiagonalGate gg = lift(g, policy);
    auto mus = coset_reps(BitMat::identity(n), c.c2_perp());
    Reducer syn(cc.c2_perp());
    std::set<BitVec> images;
    for (const auto &m : mus) {
        images.insert(syn.reduce(m.concat(BitVec(n))));
    }
    require(images.size() == mus.size() && mus.size() == (size_t{1} << cc.frame().syndrome_basis.num_rows()),
            "syndrome labels are not a bijection");
    require(cc.k() == c.k(), "k changed");
    for (const auto &mu : mus) {
        for (uint64_t a = 0; a < (uint64_t{1} << c.k()); a++) {
            BitVec gamma = c.z_logical(a);
            Cyclo before = coefficient(c, g, mu, gamma);
            Cyclo after = coefficient(cc, gg, mu.concat(BitVec(n)), gamma.concat(BitVec(n)));
            require(before == after, "entry differs at mu=" + mu.str() + " gamma=" + gamma.str() + " (" +
                                         lift_policy_name(policy) + ")");
            entries++;
        }
    }
}

std::string criterion1() {
    auto f = steane_instance();
    auto p = is_preserved(f.code, f.gate);
    require(p.preserved, "not preserved");
    auto row = trivial_row(f.code, f.gate);
    require(equal_up_to_phase(row.values, {Cyclo::cos_pi_over(2), Cyclo::i_sin_pi_over(2)}),
            "row differs from (cos pi/4, i sin pi/4)");
    auto l = induced_logical(f.code, f.gate);
    auto m = find_match(l, "P†[0]");
    require(m.matched, "logical is not P†");
    require(level_of(l) == 2, "level is not 2");
    return "row (cos π/4, i sin π/4), logical " + describe(phase_polynomial(l.level, l.exps)) + ", level 2";
}

std::string criterion2() {
    size_t entries = 0;
    std::vector<std::vector<int64_t>> r7(7, std::vector<int64_t>(7, 0));
    std::vector<std::vector<int64_t>> r4(4, std::vector<int64_t>(4, 0));
    for (size_t i = 0; i < 7; i++) {
        r7[i][i] = 1;
    }
    for (size_t i = 0; i < 4; i++) {
        r4[i][i] = 1;
        r4[i][(i + 1) % 4] = r4[(i + 1) % 4][i] = 2;
    }
    check_invariance(steane_code(), DiagonalGate::transversal_zrot(7, 2), LiftPolicy::kIdentityTensor, entries);
    check_invariance(steane_code(), DiagonalGate::transversal_zrot(7, 2), LiftPolicy::kNextLevelRotation, entries);
    check_invariance(steane_code(), DiagonalGate::qfd(7, 2, r7), LiftPolicy::kQfdTensor, entries);
    check_invariance(four22_code(), DiagonalGate::transversal_zrot(4, 2), LiftPolicy::kIdentityTensor, entries);
    check_invariance(four22_code(), DiagonalGate::transversal_zrot(4, 3), LiftPolicy::kNextLevelRotation, entries);
    check_invariance(four22_code(), DiagonalGate::qfd(4, 2, r4), LiftPolicy::kQfdTensor, entries);
    return std::to_string(entries) + " entries identical over 6 (code, policy) pairs";
}

std::string criterion3() {
    CssCode c = steane_code();
    DiagonalGate g = DiagonalGate::transversal_zrot(7, 2);
    c = concatenate(c);
    g = lift(g, LiftPolicy::kNextLevelRotation);
    require(c.params() == "[[14,1]]" && distances(c).d_z.weight == 3, "[[14,1,3]] step");
    auto r = theorem2_remove(c, g);
    require(r.admissible, "removal inadmissible");
    const CssCode &t = r.code;
    Cyclo cs = Cyclo::cos_pi_over(3);
    Cyclo sn = Cyclo::i_sin_pi_over(3);
    auto row = trivial_row(t, g);
    require(equal_up_to_frame_and_phase(row.values, {cs * cs, sn * cs, sn * sn, sn * cs}, 2), "row mismatch");
    auto l = induced_logical(t, g);
    auto m = find_match(l, "T†[0] T†[1]");
    require(m.matched, "logical is not (T†)^2");
    require(level_of(l) == 3, "level is not 3");
    auto d = distances(t);
    require(d.d_z.weight == 2 && d.d_z.exact, "d_z is not 2");
    return "[[14,2,2]] row (c², ics, -s², ics), (T†)⊗2 with basis change, level 3, d_z 2";
}

std::string criterion4() {
    std::ostringstream out;
    for (int l = 2; l <= 6; l++) {
        auto f = family_2l_l_2(l);
        require(f.code.n() == (size_t{1} << l) && f.code.k() == (size_t)l, "parameters at l=" + std::to_string(l));
        auto row = trivial_row(f.code, f.gate);
        require(equal_up_to_phase(row.values, two_l_expected_row(l)), "row at l=" + std::to_string(l));
        auto lg = induced_logical(f.code, f.gate);
        require(level_of(lg) == l, "level at l=" + std::to_string(l));
        out << (l > 2 ? ", " : "") << f.code.params();
    }
    return "rows and levels match for " + out.str();
}

std::string criterion5() {
    auto f = triorthogonal_2(3);
    require(f.code.n() == 30 && f.code.k() == 2, "parameters");
    require(f.gate == DiagonalGate::transversal_zrot(30, 4), "gate");
    require(is_preserved(f.code, f.gate).preserved, "not preserved");
    auto l = induced_logical(f.code, f.gate);
    require(find_match(l, "Z^{1/8}†[0] Z^{1/8}†[1]").matched, "logical is not the √T† pair");
    require(level_of(l) == 4, "level is not 4");
    return "[[30,2,2]] preserved, logical (√T†)⊗2, level 4";
}

std::string criterion6() {
    auto res = qrm_pipeline(1, 2);
    const auto &ms = res.milestones;
    require(ms.size() == 4, "milestones");
    require(ms[0].params() == "[[4,2]]" && ms[1].params() == "[[64,2]]" && ms[2].params() == "[[64,21]]" &&
                ms[3].params() == "[[64,15]]",
            "parameter chain");
    require(distances(ms[0]).d_z.weight == 2 && distances(ms[1]).d_z.weight == 2 &&
                distances(ms[2]).d_z.weight == 2,
            "intermediate distances");
    require(res.concatenations == 4 && res.removals == 19 && res.additions == 6, "operation counts");
    const CssCode &fin = ms[3];
    // Bounded search only (budget 0 forces it), radius 4.
    auto dz = min_weight_excluding(fin.c2_perp(), fin.z_stab(), 4, 0);
    require(dz.weight == 4 && dz.witness.weight() == 4, "bounded d_z is not 4");
    auto dx = distances(fin);
    require(std::min(dx.d_x.weight, dx.d_z.weight) == 4, "final distance");
    CssCode target = qrm_code(2, 6);
    require(same_span(fin.x_stab(), target.x_stab()) && same_span(fin.z_stab(), target.z_stab()),
            "final code differs from qrm_code(2,6)");
    auto cert = sampled_certificate(fin, res.final_gate, kSampleSeed, 100, 100);
    require(cert.passed(), "sampled certificate failed");
    require(cert.generator_checks == 15 && cert.random_checks == 100 && cert.zero_checks == 100, "sample counts");
    require(cert.predicted_degree == 3 && cert.predicted_level == 3, "prediction is not a CCZ product");
    // Companion full exact checks.
    auto q16 = qrm_instance(2, 4);
    require(is_preserved(q16.code, q16.gate).preserved, "[[16,6,4]] not preserved");
    auto f32 = family_2l_l_2(5);
    require(f32.code.params() == "[[32,5]]" && is_preserved(f32.code, f32.gate).preserved, "[[32,5,2]]");
    // Extra evidence: the exhaustive preservation check of [[64,15,4]] fits the default budget.
    auto full = is_preserved(fin, res.final_gate);
    require(full.preserved, "exhaustive check of [[64,15,4]] failed");
    return "[[4,2,2]]→[[64,2,2]]→[[64,21,2]]→[[64,15,4]], 4/19/6 ops, d_z 4, sampled certificate passed "
           "(15 generators, 100 random, 100 zero), [[16,6,4]] and [[32,5,2]] exact, full [[64,15,4]] norm 1";
}

std::string criterion7() {
    std::vector<std::pair<CssCode, DiagonalGate>> cases;
    cases.emplace_back(steane_code(), DiagonalGate::transversal_zrot(7, 2));
    cases.emplace_back(four22_code(), DiagonalGate::transversal_zrot(4, 2));
    cases.emplace_back(four22_code(), DiagonalGate::transversal_zrot(4, 3));
    CssCode s14 = concatenate(steane_code());
    cases.emplace_back(s14, DiagonalGate::transversal_zrot(14, 3));
    cases.emplace_back(s14, lift(DiagonalGate::transversal_zrot(7, 2), LiftPolicy::kIdentityTensor));
    CssCode c8 = concatenate(four22_code());
    cases.emplace_back(c8, DiagonalGate::transversal_zrot(8, 3));
    for (int l = 2; l <= 4; l++) {
        auto f = family_2l_l_2(l);
        cases.emplace_back(f.code, f.gate);
    }
    auto tri = triorthogonal_2(2);
    cases.emplace_back(tri.code, tri.gate);
    cases.emplace_back(punctured_qrm(2), DiagonalGate::transversal_zrot(7, 2));
    cases.emplace_back(punctured_qrm(3), DiagonalGate::transversal_zrot(15, 3));
    cases.emplace_back(qrm_code(2, 4), DiagonalGate::transversal_zrot(16, 2));
    cases.emplace_back(qrm_code(1, 4), DiagonalGate::transversal_zrot(16, 4));
    double worst = 0;
    for (const auto &[c, g] : cases) {
        auto rep = crosscheck(c, g, kOracleTol);
        require(rep.verdicts_agree(), c.params() + " verdicts disagree");
        require(rep.ok(), c.params() + ": " + rep.witness);
        worst = std::max({worst, rep.diagonal_deviation, rep.row_deviation});
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    return std::to_string(cases.size()) + " code/gate pairs, max deviation " + buf;
}

std::string criterion8() {
    std::mt19937_64 rng(8);
    // Split identity, with the sign from moving y inside C1'.
    int split = 0;
    while (split < kPropertyCases) {
        size_t n = 3 + rng() % 8;
        size_t a = rng() % (n - 1);
        size_t k = 1 + rng() % std::min<size_t>(3, n - a - 1);
        CssCode c = random_code(rng, n, a, k);
        BitVec w0 = BitVec::from_mask(n, rng() & ((uint64_t{1} << n) - 1));
        if (c.z_stab().empty() || contains(c.c1(), w0)) {
            continue;
        }
        DiagonalGate g = random_block_gate(rng, n, 4);
        auto r = remove_z(c, g, w0);
        BitVec shift = c.y() ^ r.code.y();
        auto sigma = [&](const BitVec &v) { return v.dot(shift) ? -Cyclo::one() : Cyclo::one(); };
        BitVec mu = BitVec::from_mask(n, rng() & ((uint64_t{1} << n) - 1));
        BitVec gamma = c.z_logical(rng() & ((uint64_t{1} << c.k()) - 1));
        BitVec g2 = gamma ^ r.gamma0;
        Cyclo lhs = coefficient(c, g, mu, gamma);
        Cyclo rhs = sigma(mu ^ gamma) * coefficient(r.code, g, mu, gamma) + sigma(mu ^ g2) * coefficient(r.code, g, mu, g2);
        require(lhs == rhs, "split identity");
        split++;
    }
    // Side agreement.
    for (int t = 0; t < kPropertyCases; t++) {
        size_t n = 2 + rng() % 9;
        size_t a = rng() % n;
        size_t k = 1 + rng() % std::min<size_t>(3, n - a);
        CssCode c = random_code(rng, n, a, k);
        DiagonalGate g = random_block_gate(rng, n, 4);
        BitVec mu = BitVec::from_mask(n, rng() & ((uint64_t{1} << n) - 1));
        BitVec gamma = c.z_logical(rng() & ((uint64_t{1} << c.k()) - 1));
        require(coefficient(c, g, mu, gamma, {kDefaultBudgetLog2, Side::kX}) ==
                    coefficient(c, g, mu, gamma, {kDefaultBudgetLog2, Side::kZ}),
                "side agreement");
    }
    // Level formula against the commutator recursion.
    for (int t = 0; t < kPropertyCases; t++) {
        size_t k = 1 + rng() % 4;
        int level = 1 + (int)(rng() % 4);
        PhasePolynomial p{k, level, {}};
        for (uint64_t mono = 0; mono < (uint64_t{1} << k); mono++) {
            if (rng() % 3 == 0) {
                int64_t c = (int64_t)(rng() % (uint64_t{1} << level));
                if (c) {
                    p.coeffs[mono] = c;
                }
            }
        }
        auto e = p.exps();
        require(hierarchy_level(phase_polynomial(level, e)) == commutator_level(level, e), "level formula");
    }
    // Pauli coefficients and entries.
    for (int t = 0; t < kPropertyCases; t++) {
        size_t n = 1 + rng() % 6;
        DiagonalGate g = rng() % 4 ? random_block_gate(rng, n, 5) : random_qfd(rng, n, 4);
        size_t size = size_t{1} << n;
        std::vector<Cyclo> f(size);
        for (uint64_t v = 0; v < size; v++) {
            f[v] = g.pauli_coeff(BitVec::from_mask(n, v));
        }
        uint64_t u = rng() & (size - 1);
        Cyclo acc = Cyclo::zero();
        for (uint64_t v = 0; v < size; v++) {
            acc += std::popcount(u & v) % 2 ? -f[v] : f[v];
        }
        require(acc == g.entry(BitVec::from_mask(n, u)), "Pauli round trip");
    }
    // DFS switch on [[14,1,3]].
    auto d = dfs_switch(concatenate(steane_code()));
    require(d.y_balanced == half_ones(7) && d.x_positions == half_ones(7), "DFS switch");
    return "4 suites × " + std::to_string(kPropertyCases) + " cases, DFS y'' = [1₇,0₇]";
}

std::string criterion9() {
    auto p = is_preserved(four22_code(), DiagonalGate::transversal_zrot(4, 3));
    require(!p.preserved && p.norm == Cyclo::dyadic(3, 2), "[[4,2,2]]+T norm is not 3/4");
    auto tri = triorthogonal_2(2);
    auto r = add_x(tri.code, tri.gate, half_ones(7));
    require(r.checked && !r.admissible, "addition reported admissible");
    require(r.witness && !r.witness->second.is_zero(), "no nonzero witness");
    BitVec wg = tri.code.z_logical(r.witness->first);
    require(wg.dot(half_ones(7)), "witness logical commutes with x0");
    require(r.witness->second == coefficient(tri.code, tri.gate, BitVec(14), wg), "witness is not A_{0,gamma}");
    return "norm 3/4; addition inadmissible, witness " + r.witness->second.str();
}

}  // namespace

int main() {
    struct Item {
        int id;
        double limit;
        std::function<std::string()> run;
    };
    std::vector<Item> items = {
        {1, kLimit1, criterion1}, {2, kLimit2, criterion2}, {3, kLimit3, criterion3},
        {4, kLimit4, criterion4}, {5, kLimit5, criterion5}, {6, kLimit6, criterion6},
        {7, kLimit7, criterion7}, {8, 0, criterion8},       {9, 0, criterion9},
    };
    int failed = 0;
    for (const auto &it : items) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = it.run();
        } catch (const std::exception &e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && it.limit > 0 && secs >= it.limit) {
            ok = false;
            detail += " [time limit " + std::to_string((int)it.limit) + " s exceeded]";
        }
        failed += !ok;
        std::printf("criterion %d: %s (%.2f s) %s\n", it.id, ok ? "PASS" : "FAIL", secs, detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", (int)items.size() - failed, items.size());
    return failed ? 1 : 0;
}
