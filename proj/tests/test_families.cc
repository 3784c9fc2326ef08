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

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "diagclimb/families.h"
#include "diagclimb/hierarchy.h"
#include "test_util.h"

using namespace diagclimb;
using namespace diagclimb::testing;

namespace {

size_t binom(size_t n, size_t r) {
    size_t out = 1;
    for (size_t i = 0; i < r; i++) {
        out = out * (n - i) / (i + 1);
    }
    return out;
}

// Some coordinate permutation maps rowspace(a) onto rowspace(b).
bool equivalent_by_permutation(const BitMat &a, const BitMat &b) {
    size_t n = a.cols();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        BitMat moved(n);
        for (const auto &r : a.rows()) {
            BitVec v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(perm[i], r.get(i));
            }
            moved.push_back(v);
        }
        if (same_span(moved, b)) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST(families, rm_generator_examples) {
    EXPECT_EQ(rm_generator(0, 2).strs(), (std::vector<std::string>{"1111"}));
    BitMat r13 = rm_generator(1, 3);
    EXPECT_EQ(rank(r13), 4u);
    for (const auto &v : span_of(r13)) {
        EXPECT_EQ(v.weight() % 2, 0u);
    }
    BitMat r24 = rm_generator(2, 4);
    BitMat r14 = rm_generator(1, 4);
    for (const auto &a : r24.rows()) {
        for (const auto &b : r14.rows()) {
            EXPECT_FALSE(a.dot(b));
        }
    }
    EXPECT_EQ(rank(r24) + rank(r14), 16u);
    EXPECT_THROW(rm_generator(3, 2), std::invalid_argument);
}

TEST(families, rm_nesting_and_duality) {
    for (int m = 1; m <= 6; m++) {
        for (int r = 0; r <= m; r++) {
            BitMat g = rm_generator(r, m);
            size_t dim = 0;
            for (int i = 0; i <= r; i++) {
                dim += binom((size_t)m, (size_t)i);
            }
            ASSERT_EQ(rank(g), dim);
            if (r > 0) {
                ASSERT_TRUE(is_subspace(rm_generator(r - 1, m), g));
            }
            if (r < m) {
                ASSERT_TRUE(same_span(dual_basis(g), rm_generator(m - r - 1, m)));
            }
        }
    }
}

TEST(families, qrm_codes) {
    EXPECT_EQ(qrm_code(1, 2), four22_code());
    CssCode q = qrm_code(2, 4);
    EXPECT_EQ(q.n(), 16u);
    EXPECT_EQ(q.k(), 6u);
    auto d = distances(q);
    EXPECT_EQ(std::min(d.d_x.weight, d.d_z.weight), 4u);
    DiagonalGate g = DiagonalGate::transversal_zrot(16, 2);
    ASSERT_TRUE(is_preserved(q, g).preserved);
    auto l = induced_logical(q, g);
    EXPECT_EQ(hierarchy_level(phase_polynomial(l.level, l.exps)), 2);

    CssCode q64 = qrm_code(2, 6);
    EXPECT_EQ(q64.k(), 15u);
    auto d64 = distances(q64);
    EXPECT_EQ(d64.d_z.weight, 4u);
    EXPECT_TRUE(d64.d_z.exact);
    EXPECT_EQ(d64.d_x.weight, 16u);

    CssCode q36 = qrm_code(3, 6);
    EXPECT_EQ(q36.n(), 64u);
    EXPECT_EQ(q36.k(), 20u);
    EXPECT_THROW(qrm_code(2, 2), std::invalid_argument);
}

TEST(families, two_l_rows_small) {
    for (int l = 2; l <= 5; l++) {
        auto f = family_2l_l_2(l);
        EXPECT_EQ(f.code.n(), size_t{1} << l);
        EXPECT_EQ(f.code.k(), (size_t)l);
        EXPECT_TRUE(equal_up_to_phase(trivial_row(f.code, f.gate).values, two_l_expected_row(l))) << l;
        auto lg = induced_logical(f.code, f.gate);
        EXPECT_EQ(hierarchy_level(phase_polynomial(lg.level, lg.exps)), l);
    }
    EXPECT_THROW(family_2l_l_2(1), std::invalid_argument);
}

TEST(families, punctured_and_triorthogonal) {
    CssCode p2 = punctured_qrm(2);
    EXPECT_EQ(p2.n(), 7u);
    EXPECT_EQ(p2.k(), 1u);
    EXPECT_EQ(rank(p2.x_stab()), 3u);
    EXPECT_TRUE(equivalent_by_permutation(p2.x_stab(), steane_code().x_stab()));
    EXPECT_TRUE(equivalent_by_permutation(p2.z_stab(), steane_code().z_stab()));
    auto d2 = distances(p2);
    EXPECT_EQ(std::min(d2.d_x.weight, d2.d_z.weight), 3u);

    CssCode p3 = punctured_qrm(3);
    EXPECT_EQ(p3.n(), 15u);
    EXPECT_EQ(p3.k(), 1u);
    EXPECT_EQ(distances(p3).d_z.weight, 3u);
    EXPECT_TRUE(is_preserved(p3, DiagonalGate::transversal_zrot(15, 3)).preserved);

    auto t2 = triorthogonal_2(2);
    EXPECT_EQ(t2.code.n(), 14u);
    EXPECT_EQ(t2.code.k(), 2u);
    EXPECT_EQ(distances(t2.code).d_z.weight, 2u);

    auto t3 = triorthogonal_2(3);
    EXPECT_EQ(t3.code.n(), 30u);
    EXPECT_EQ(t3.code.k(), 2u);
    EXPECT_EQ(t3.gate, DiagonalGate::transversal_zrot(30, 4));
    EXPECT_EQ(distances(t3.code).d_z.weight, 2u);
}

TEST(families, qrm_pipeline_small) {
    auto res = qrm_pipeline(1, 2);
    EXPECT_EQ(res.concatenations, 4);
    EXPECT_EQ(res.removals, 19);
    EXPECT_EQ(res.additions, 6);
    ASSERT_EQ(res.milestones.size(), 4u);
    EXPECT_EQ(res.milestones[0].params(), "[[4,2]]");
    EXPECT_EQ(res.milestones[1].params(), "[[64,2]]");
    EXPECT_EQ(res.milestones[2].params(), "[[64,21]]");
    EXPECT_EQ(res.milestones[3].params(), "[[64,15]]");
    EXPECT_EQ(distances(res.milestones[2]).d_z.weight, 2u);
    CssCode target = qrm_code(2, 6);
    EXPECT_TRUE(same_span(res.milestones[3].x_stab(), target.x_stab()));
    EXPECT_TRUE(same_span(res.milestones[3].z_stab(), target.z_stab()));
    for (const auto &s : res.steps) {
        EXPECT_TRUE(s.admissible) << s.kind << " " << s.parameter;
        EXPECT_TRUE(s.checked) << s.kind << " " << s.parameter;
    }
    EXPECT_EQ(res.final_gate, DiagonalGate::transversal_zrot(64, 3));
    // Replaying the recorded script lands on the same code.
    CssCode c = res.milestones[0];
    DiagonalGate g = DiagonalGate::transversal_zrot(4, 2);
    std::vector<SynthStep> log;
    run_pipeline(c, g, res.script, {}, log);
    EXPECT_EQ(c, res.milestones[3]);
    EXPECT_THROW(qrm_pipeline(2, 3), std::invalid_argument);
}

TEST(families, sampled_certificate_small_codes) {
    auto ok = sampled_certificate(qrm_code(2, 4), DiagonalGate::transversal_zrot(16, 2), 5, 20, 20);
    EXPECT_TRUE(ok.passed());
    EXPECT_EQ(ok.generator_checks, 6u);
    EXPECT_EQ(ok.predicted_level, 2);
    EXPECT_EQ(ok.predicted_degree, 2);

    auto bad = sampled_certificate(four22_code(), DiagonalGate::transversal_zrot(4, 3), 5, 20, 20);
    EXPECT_FALSE(bad.passed());
}
