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

#include "diagclimb/gate.h"
#include "test_util.h"

using namespace diagclimb;
using namespace diagclimb::testing;

TEST(gate, transversal_zrot_entries) {
    DiagonalGate g = DiagonalGate::transversal_zrot(1, 1);
    EXPECT_EQ(g.entry(BitVec::from_str("0")), -Cyclo::root(2, 1));
    EXPECT_EQ(g.entry(BitVec::from_str("1")), Cyclo::root(2, 1));

    DiagonalGate p = DiagonalGate::transversal_zrot(7, 2);
    EXPECT_EQ(p.entry(BitVec(7)), Cyclo::root(3, -7));
    // Equals e^{-7i pi/4} P^{x7}: entry u is e^{-7i pi/4} i^{|u|}.
    for (uint64_t u = 0; u < 128; u++) {
        BitVec v = BitVec::from_mask(7, u);
        EXPECT_EQ(p.entry(v), Cyclo::root(3, -7) * Cyclo::root(2, (int64_t)v.weight()));
    }
    DiagonalGate t = DiagonalGate::transversal_zrot(14, 3);
    for (uint64_t u : {0ull, 1ull, 0x3fffull, 0x1234ull}) {
        BitVec v = BitVec::from_mask(14, u);
        EXPECT_EQ(t.entry(v), Cyclo::root(4, -14) * Cyclo::root(3, (int64_t)v.weight()));
    }
    EXPECT_EQ(p.zrot_angle(), 2);
    EXPECT_THROW(DiagonalGate::transversal_zrot(3, 8), std::out_of_range);
}

TEST(gate, elementary_blocks) {
    LocalDiag cz = elementary_ckz(1, 0, false);
    EXPECT_EQ(cz.level, 1);
    EXPECT_EQ(cz.exps, (std::vector<int64_t>{0, 0, 0, 1}));
    LocalDiag t = elementary_ckz(0, 2, false);
    EXPECT_EQ(t.level, 3);
    EXPECT_EQ(t.exps, (std::vector<int64_t>{0, 1}));
    LocalDiag tdg = elementary_ckz(0, 2, true);
    EXPECT_EQ(tdg.exps, (std::vector<int64_t>{0, 7}));
    LocalDiag ccz = elementary_ckz(2, 0, false);
    EXPECT_EQ(ccz.exps.back(), 1);
    EXPECT_EQ(ccz.exps.size(), 8u);
    EXPECT_THROW(elementary_ckz(3, 0, false), std::invalid_argument);
}

TEST(gate, entry_exponent_examples) {
    EXPECT_EQ(DiagonalGate::transversal_zrot(4, 2).entry_exponent(BitVec(4)), 4);
    DiagonalGate pp = DiagonalGate::qfd(2, 2, {{1, 0}, {0, 1}});
    EXPECT_EQ(pp.entry_exponent(BitVec::from_str("11")), 2);
    EXPECT_EQ(pp.entry(BitVec::from_str("11")), Cyclo::integer(-1));
    BitVec u = BitVec::from_str("0110");
    DiagonalGate z = DiagonalGate::transversal_zrot(4, 3);
    EXPECT_EQ(z.entry_exponent(u), z.entry_exponent(u));
}

TEST(gate, pauli_coeff_examples) {
    DiagonalGate cz = DiagonalGate::block_product(2, {{{0, 1}, elementary_ckz(1, 0, false)}});
    Cyclo half = Cyclo::dyadic(1, 1);
    EXPECT_EQ(cz.pauli_coeff(BitVec::from_str("00")), half);
    EXPECT_EQ(cz.pauli_coeff(BitVec::from_str("10")), half);
    EXPECT_EQ(cz.pauli_coeff(BitVec::from_str("01")), half);
    EXPECT_EQ(cz.pauli_coeff(BitVec::from_str("11")), -half);

    // exp(-i pi/2^l Z) = cos(pi/2^l) I - i sin(pi/2^l) Z.
    for (int l = 1; l <= 6; l++) {
        DiagonalGate r = DiagonalGate::transversal_zrot(1, l);
        EXPECT_EQ(r.pauli_coeff(BitVec::from_str("0")), Cyclo::cos_pi_over(l));
        EXPECT_EQ(r.pauli_coeff(BitVec::from_str("1")), Cyclo::neg_i_sin_pi_over(l));
    }

    DiagonalGate id = DiagonalGate::identity(3);
    EXPECT_EQ(id.pauli_coeff(BitVec(3)), Cyclo::one());
    EXPECT_TRUE(id.pauli_coeff(BitVec::from_str("010")).is_zero());
}

TEST(gate, invalid_construction) {
    EXPECT_THROW(DiagonalGate::block_product(3, {{{0, 1}, elementary_ckz(1, 0, false)}, {{1}, zrot_block(2)}}),
                 std::invalid_argument);
    EXPECT_THROW(DiagonalGate::qfd(2, 2, {{1, 1}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(DiagonalGate::block_product(2, {{{0, 2}, elementary_ckz(1, 0, false)}}), std::out_of_range);
}

TEST(gate, lift_examples) {
    DiagonalGate p = DiagonalGate::transversal_zrot(7, 2);
    EXPECT_EQ(lift(p, LiftPolicy::kNextLevelRotation), DiagonalGate::transversal_zrot(14, 3));
    DiagonalGate id = lift(p, LiftPolicy::kIdentityTensor);
    EXPECT_EQ(id.n(), 14u);
    for (const auto &b : id.blocks()) {
        for (size_t q : b.qubits) {
            EXPECT_GE(q, 7u);
        }
    }
    DiagonalGate q = DiagonalGate::qfd(2, 2, {{1, 0}, {0, 1}});
    DiagonalGate lq = lift(q, LiftPolicy::kQfdTensor);
    EXPECT_EQ(lq.kind(), DiagonalGate::Kind::kQfd);
    EXPECT_EQ(lq.level(), 3);
    EXPECT_EQ(lq.n(), 4u);
    EXPECT_THROW(lift(q, LiftPolicy::kNextLevelRotation), std::invalid_argument);
    EXPECT_THROW(lift(p, LiftPolicy::kQfdTensor), std::invalid_argument);
    EXPECT_EQ(parse_lift_policy(lift_policy_name(LiftPolicy::kQfdTensor)), LiftPolicy::kQfdTensor);
}

TEST(gate_properties, lift_preserves_diagonal_pairs) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 1000; t++) {
        size_t n = 1 + rng() % 6;
        int choice = (int)(rng() % 3);
        DiagonalGate g;
        LiftPolicy policy;
        if (choice == 0) {
            g = random_block_gate(rng, n, 4);
            policy = LiftPolicy::kIdentityTensor;
        } else if (choice == 1) {
            g = DiagonalGate::transversal_zrot(n, 1 + (int)(rng() % 6));
            policy = LiftPolicy::kNextLevelRotation;
        } else {
            g = random_qfd(rng, n, 4);
            policy = rng() % 2 ? LiftPolicy::kQfdTensor : LiftPolicy::kIdentityTensor;
        }
        DiagonalGate h = lift(g, policy);
        for (uint64_t u = 0; u < (uint64_t{1} << n); u++) {
            BitVec v = BitVec::from_mask(n, u);
            ASSERT_EQ(h.entry(v.concat(v)), g.entry(v));
        }
    }
}

TEST(gate_properties, pauli_coefficients_invert_entries) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; t++) {
        size_t n = 1 + rng() % 8;
        DiagonalGate g = rng() % 4 ? random_block_gate(rng, n, 5) : random_qfd(rng, n, 4);
        size_t size = size_t{1} << n;
        std::vector<Cyclo> f(size);
        Cyclo norm = Cyclo::zero();
        for (uint64_t v = 0; v < size; v++) {
            f[v] = g.pauli_coeff(BitVec::from_mask(n, v));
            norm += f[v].abs_sq();
        }
        ASSERT_EQ(norm, Cyclo::one());
        // Reconstruct a few entries d_u = sum_v (-1)^(u.v) f(v) exactly.
        for (int s = 0; s < 3; s++) {
            uint64_t u = rng() & (size - 1);
            Cyclo acc = Cyclo::zero();
            for (uint64_t v = 0; v < size; v++) {
                if (std::popcount(u & v) % 2) {
                    acc -= f[v];
                } else {
                    acc += f[v];
                }
            }
            BitVec uv = BitVec::from_mask(n, u);
            ASSERT_EQ(acc, g.entry(uv));
            ASSERT_LT(std::abs(acc.to_complex() - dense_entry(g, uv)), 1e-12);
        }
    }
}
