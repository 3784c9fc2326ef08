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

#ifndef DIAGCLIMB_FAMILIES_H
#define DIAGCLIMB_FAMILIES_H

#include <cstdint>
#include <string>
#include <vector>

#include "diagclimb/css_code.h"
#include "diagclimb/gate.h"
#include "diagclimb/gen_coeff.h"
#include "diagclimb/synth.h"

namespace diagclimb {

/// Generator of RM(r, m) by the (u, u + v) recursion; empty for r < 0.
BitMat rm_generator(int r, int m);

/// X-stabilizers RM(r-1, m), Z-stabilizers RM(m-r-1, m), y = 0.
CssCode qrm_code(int r, int m);
/// Shortened RM(1, l+1) / shortened RM(l-1, l+1): the [[2^(l+1)-1, 1, 3]] code.
CssCode punctured_qrm(int l);
CssCode steane_code();
CssCode four22_code();

/// A code together with the physical gate it is built for.
struct FamilyInstance {
    std::string name;
    CssCode code;
    DiagonalGate gate;
};

/// [[4,2,2]] under transversal_zrot(4,2), then (concatenate, theorem2_remove)
/// l - 2 times: [[2^l, l, 2]] under transversal_zrot(2^l, l).
FamilyInstance family_2l_l_2(int l, EngineOptions opt = {});
/// Expected trivial row ((2^(l-1) - 1)/2^(l-1), -1/2^(l-1), ...), up to a global phase.
std::vector<Cyclo> two_l_expected_row(int l);
/// theorem2_remove(concatenate(punctured_qrm(l))) under transversal_zrot(2^(l+2) - 2, l + 1).
FamilyInstance triorthogonal_2(int l, EngineOptions opt = {});
FamilyInstance steane_instance();
FamilyInstance qrm_instance(int r, int m);

struct QrmPipelineResult {
    std::vector<SynthStep> steps;
    int concatenations = 0;
    int removals = 0;
    int additions = 0;
    /// Codes after each phase: start, concatenated, removed, added.
    std::vector<CssCode> milestones;
    DiagonalGate final_gate;
    /// The executed operations, replayable by run_pipeline from milestones[0].
    std::vector<PipelineOp> script;
};

/// One (r, m) -> (r+1, m+h) step with h = r + m/r + 1. Removed rows are the
/// target RM(r+1, m+h) basis modulo the current C1; added rows the target
/// RM(r, m+h) basis modulo the current C2. After the concatenations the gate
/// is set to transversal_zrot(2^(m+h), (m+h)/(r+1)).
QrmPipelineResult qrm_pipeline(int r, int m, EngineOptions opt = {}, bool with_distances = false);

struct SampledCertificate {
    size_t generator_checks = 0;
    size_t random_checks = 0;
    size_t zero_checks = 0;
    size_t generator_failures = 0;
    size_t random_failures = 0;
    size_t zero_failures = 0;
    int predicted_degree = 0;
    int predicted_level = 0;
    bool passed() const {
        return generator_failures == 0 && random_failures == 0 && zero_failures == 0;
    }
};

/// Compares A_{0,g(alpha)} against the transform of the predicted logical
/// diagonal D(beta) = d_{beta H + y} on the k generators and `random_gammas`
/// random alphas, and checks `random_zeros` random (mu != 0, gamma) are 0.
SampledCertificate sampled_certificate(
    const CssCode &code,
    const DiagonalGate &gate,
    uint64_t seed,
    size_t random_gammas = 100,
    size_t random_zeros = 100,
    EngineOptions opt = {});

}  // namespace diagclimb

#endif
