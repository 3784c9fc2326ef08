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

#include <gtest/gtest.h>

#include <random>

#include "diagclimb/families.h"
#include "diagclimb/gen_coeff.h"
#include "diagclimb/synth.h"
#include "test_util.h"

using namespace diagclimb;
using namespace diagclimb::testing;

namespace {

Cyclo c8() {
    return Cyclo::cos_pi_over(3);
}

Cyclo is8() {
    return Cyclo::i_sin_pi_over(3);
}

CssCode steane_concat() {
    return concatenate(steane_code());
}

CssCode tri14() {
    return remove_z(steane_concat(), DiagonalGate::transversal_zrot(14, 3),
                    BitVec::ones(7).concat(BitVec(7)))
        .code;
}

BitVec bits(const char *s) {
    return BitVec::from_str(s);
}

}  // namespace

TEST(gen_coeff, steane_phase_row) {
    auto row = trivial_row(steane_code(), DiagonalGate::transversal_zrot(7, 2));
    ASSERT_EQ(row.values.size(), 2u);
    std::vector<Cyclo> target = {Cyclo::cos_pi_over(2), Cyclo::i_sin_pi_over(2)};
    EXPECT_TRUE(equal_up_to_phase(row.values, target));
    EXPECT_TRUE(row.gammas[0].is_zero());
    EXPECT_EQ(coefficient(steane_code(), DiagonalGate::transversal_zrot(7, 2), BitVec(7), BitVec(7)),
              row.values[0]);
}

TEST(gen_coeff, four22_rotation_row) {
    CssCode c = four22_code();
    DiagonalGate g = DiagonalGate::transversal_zrot(4, 2);
    Cyclo h = Cyclo::dyadic(1, 1);
    std::vector<Cyclo> got;
    for (const char *gamma : {"0000", "0011", "0110", "0101"}) {
        got.push_back(coefficient(c, g, BitVec(4), bits(gamma)));
    }
    EXPECT_TRUE(equal_up_to_phase(got, {h, -h, -h, -h}));
}

TEST(gen_coeff, identity_gate_row) {
    for (const CssCode &c : {steane_code(), four22_code(), qrm_code(2, 4)}) {
        auto row = trivial_row(c, DiagonalGate::identity(c.n()));
        EXPECT_EQ(row.values[0], Cyclo::one());
        for (size_t i = 1; i < row.values.size(); i++) {
            EXPECT_TRUE(row.values[i].is_zero());
        }
    }
}

TEST(gen_coeff, tri14_row) {
    auto row = trivial_row(tri14(), DiagonalGate::transversal_zrot(14, 3));
    Cyclo c = c8();
    Cyclo s = is8();
    // Stored frame: gamma = g0 carries the s^2 entry.
    EXPECT_TRUE(equal_up_to_phase(row.values, {c * c, s * s, s * c, s * c}));
    EXPECT_TRUE(equal_up_to_frame_and_phase(row.values, {c * c, s * c, s * s, s * c}, 2));
}

TEST(gen_coeff, two_l_row_l4) {
    auto f = family_2l_l_2(4);
    EXPECT_TRUE(equal_up_to_phase(trivial_row(f.code, f.gate).values, two_l_expected_row(4)));
}

TEST(gen_coeff, four22_cz_pair_row) {
    CssCode c = four22_code();
    DiagonalGate g = DiagonalGate::block_product(
        4, {{{0, 1}, elementary_ckz(1, 0, false)}, {{2, 3}, elementary_ckz(1, 0, false)}});
    Cyclo h = Cyclo::dyadic(1, 1);
    std::vector<Cyclo> got;
    for (const char *gamma : {"0000", "0011", "0110", "0101"}) {
        got.push_back(coefficient(c, g, BitVec(4), bits(gamma)));
        EXPECT_TRUE(close(got.back().to_complex(), brute_coefficient_x(c, g, BitVec(4), bits(gamma))));
    }
    EXPECT_TRUE(equal_up_to_phase(got, {h, -h, h, h}));
}

TEST(gen_coeff, preservation_examples) {
    auto s = is_preserved(steane_code(), DiagonalGate::transversal_zrot(7, 2));
    EXPECT_TRUE(s.preserved);
    EXPECT_EQ(s.norm, Cyclo::one());

    auto t = is_preserved(four22_code(), DiagonalGate::transversal_zrot(4, 3));
    EXPECT_FALSE(t.preserved);
    EXPECT_EQ(t.norm, Cyclo::dyadic(3, 2));
    // Independent 16-term sums.
    double norm = 0;
    CssCode c = four22_code();
    DiagonalGate g = DiagonalGate::transversal_zrot(4, 3);
    for (const auto &gamma : coset_reps(c.c2_perp(), c.z_stab())) {
        norm += std::norm(brute_coefficient_x(c, g, BitVec(4), gamma));
    }
    EXPECT_NEAR(norm, 0.75, 1e-12);

    EXPECT_TRUE(is_preserved(steane_concat(), DiagonalGate::transversal_zrot(14, 3)).preserved);
}

TEST(gen_coeff, split_values_examples) {
    auto s = split_values(steane_concat(), DiagonalGate::transversal_zrot(14, 3), BitVec::ones(7).concat(BitVec(7)));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], Cyclo::one());
    EXPECT_TRUE(s[1].is_zero());

    CssCode c8 = concatenate(four22_code());
    auto t = split_values(c8, DiagonalGate::transversal_zrot(8, 3), BitVec::ones(4).concat(BitVec(4)));
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[0], Cyclo::one());
    for (size_t i = 1; i < 4; i++) {
        EXPECT_TRUE(t[i].is_zero());
    }
    EXPECT_THROW(split_values(four22_code(), DiagonalGate::transversal_zrot(4, 2), bits("1100")),
                 std::invalid_argument);
}

TEST(gen_coeff, induced_logical_examples) {
    auto l = induced_logical(steane_code(), DiagonalGate::transversal_zrot(7, 2));
    EXPECT_TRUE(equal_up_to_phase(l.entries, {Cyclo::root(3, 1), Cyclo::root(3, -1)}));

    auto t = induced_logical(tri14(), DiagonalGate::transversal_zrot(14, 3));
    EXPECT_EQ(t.entries.size(), 4u);
    for (const auto &e : t.entries) {
        EXPECT_TRUE(e.as_root_of_unity().has_value());
    }
    EXPECT_THROW(induced_logical(four22_code(), DiagonalGate::transversal_zrot(4, 3)), NotPreserved);

    // The same transform from an explicit row agrees.
    auto row = trivial_row(tri14(), DiagonalGate::transversal_zrot(14, 3));
    auto r = logical_from_row(row, t.level);
    EXPECT_EQ(r.exps, t.exps);
}

TEST(gen_coeff, budget_is_enforced) {
    EngineOptions tight;
    tight.budget_log2 = 2;
    EXPECT_THROW(is_preserved(steane_code(), DiagonalGate::transversal_zrot(7, 2), tight), BudgetExceeded);
    try {
        is_preserved(steane_code(), DiagonalGate::transversal_zrot(7, 2), tight);
    } catch (const BudgetExceeded &e) {
        EXPECT_GT(e.required_log2, 2);
    }
}

TEST(gen_coeff, sides_agree_on_paper_codes) {
    std::vector<std::pair<CssCode, DiagonalGate>> cases = {
        {steane_code(), DiagonalGate::transversal_zrot(7, 2)},
        {four22_code(), DiagonalGate::transversal_zrot(4, 3)},
        {tri14(), DiagonalGate::transversal_zrot(14, 3)},
        {punctured_qrm(3), DiagonalGate::transversal_zrot(15, 3)},
    };
    for (const auto &[c, g] : cases) {
        EngineOptions x;
        x.side = Side::kX;
        EngineOptions z;
        z.side = Side::kZ;
        auto rx = full_table(c, g, x);
        auto rz = full_table(c, g, z);
        ASSERT_EQ(rx.size(), rz.size());
        for (size_t i = 0; i < rx.size(); i++) {
            EXPECT_EQ(rx[i].values, rz[i].values);
        }
    }
}

TEST(gen_coeff_properties, side_agreement_and_float_oracle) {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 1000; t++) {
        size_t n = 2 + rng() % 9;
        size_t a = rng() % n;
        size_t k = 1 + rng() % std::min<size_t>(3, n - a);
        CssCode c = random_code(rng, n, a, k);
        DiagonalGate g = rng() % 3 ? random_block_gate(rng, n, 4) : DiagonalGate::transversal_zrot(n, 1 + (int)(rng() % 4));
        BitVec mu = BitVec::from_mask(n, rng() & ((uint64_t{1} << n) - 1));
        BitVec gamma = c.z_logical(rng() & ((uint64_t{1} << c.k()) - 1));
        EngineOptions x;
        x.side = Side::kX;
        EngineOptions z;
        z.side = Side::kZ;
        Cyclo ax = coefficient(c, g, mu, gamma, x);
        Cyclo az = coefficient(c, g, mu, gamma, z);
        ASSERT_EQ(ax, az);
        ASSERT_TRUE(close(ax.to_complex(), brute_coefficient_x(c, g, mu, gamma)))
            << "t=" << t << " gate " << g.describe() << " y " << c.y().str() << " mu " << mu.str() << " gamma " << gamma.str()
            << " exact " << ax.str() << " brute " << brute_coefficient_x(c, g, mu, gamma);
        if (n <= 8) {
            ASSERT_TRUE(close(az.to_complex(), brute_coefficient_z(c, dense_pauli(g), mu, gamma)));
        }
    }
}

TEST(gen_coeff_properties, preservation_equivalent_to_vanishing_leakage) {
    std::mt19937_64 rng(52);
    int preserved = 0;
    for (int t = 0; t < 1000; t++) {
        size_t n = 2 + rng() % 9;
        size_t a = rng() % n;
        size_t k = 1 + rng() % std::min<size_t>(3, n - a);
        CssCode c = random_code(rng, n, a, k);
        // Mix in gates that often preserve: Paulis, CZ-type products and rotations.
        DiagonalGate g = rng() % 2 ? random_block_gate(rng, n, 1 + (int)(rng() % 3))
                                   : DiagonalGate::transversal_zrot(n, 1 + (int)(rng() % 3));
        auto p = is_preserved(c, g);
        auto table = full_table(c, g);
        bool leakage_free = true;
        for (size_t i = 1; i < table.size(); i++) {
            for (const auto &v : table[i].values) {
                leakage_free = leakage_free && v.is_zero();
            }
        }
        ASSERT_EQ(p.preserved, leakage_free);
        ASSERT_EQ(p.norm, row_norm(table[0]));
        preserved += p.preserved;
    }
    EXPECT_GT(preserved, 50);
}

TEST(gen_coeff_properties, kraus_completeness) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 1000; t++) {
        size_t n = 2 + rng() % 7;
        size_t a = rng() % n;
        size_t k = 1 + rng() % std::min<size_t>(3, n - a);
        CssCode c = random_code(rng, n, a, k);
        DiagonalGate g = rng() % 4 ? random_block_gate(rng, n, 5) : random_qfd(rng, n, 3);
        double total = 0;
        for (const auto &row : full_table(c, g)) {
            for (const auto &v : row.values) {
                total += std::norm(v.to_complex());
            }
        }
        ASSERT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(gen_coeff_properties, split_identity_and_split_formulas) {
    std::mt19937_64 rng(54);
    int checked = 0;
    while (checked < 1000) {
        size_t n = 3 + rng() % 8;
        size_t a = rng() % (n - 1);
        size_t k = 1 + rng() % std::min<size_t>(3, n - a - 1);
        CssCode c = random_code(rng, n, a, k);
        if (c.z_stab().empty()) {
            continue;
        }
        BitVec w0 = BitVec::from_mask(n, rng() & ((uint64_t{1} << n) - 1));
        if (contains(c.c1(), w0)) {
            continue;
        }
        DiagonalGate g = rng() % 3 ? random_block_gate(rng, n, 4) : DiagonalGate::transversal_zrot(n, 1 + (int)(rng() % 4));
        auto r = remove_z(c, g, w0);
        const CssCode &c2 = r.code;
        ASSERT_EQ(c2.k(), c.k() + 1);
        ASSERT_TRUE(r.gamma0.dot(w0));
        ASSERT_TRUE(contains(c.z_stab(), r.gamma0));
        // Sign from moving the character vector inside C1'.
        BitVec shift = c.y() ^ c2.y();
        auto sigma = [&](const BitVec &v) { return v.dot(shift) ? -Cyclo::one() : Cyclo::one(); };

        BitVec mu = c.frame().syndrome_basis.empty()
                        ? BitVec(n)
                        : c.frame().syndrome_basis.combine(rng() & ((uint64_t{1} << c.frame().syndrome_basis.num_rows()) - 1));
        uint64_t alpha = rng() & ((uint64_t{1} << c.k()) - 1);
        BitVec gamma = c.z_logical(alpha);
        Cyclo lhs = coefficient(c, g, mu, gamma);
        BitVec g1 = gamma;
        BitVec g2 = gamma ^ r.gamma0;
        Cyclo p1 = sigma(mu ^ g1) * coefficient(c2, g, mu, g1);
        Cyclo p2 = sigma(mu ^ g2) * coefficient(c2, g, mu, g2);
        ASSERT_EQ(lhs, p1 + p2);

        auto s = split_values(c, g, w0);
        Cyclo a0 = coefficient(c, g, BitVec(n), gamma);
        Cyclo q1 = sigma(g1) * coefficient(c2, g, BitVec(n), g1);
        Cyclo q2 = sigma(g2) * coefficient(c2, g, BitVec(n), g2);
        ASSERT_EQ(q1, (a0 + s[alpha]).scaled_pow2(1));
        ASSERT_EQ(q2, (a0 - s[alpha]).scaled_pow2(1));
        checked++;
    }
}
