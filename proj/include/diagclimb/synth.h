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

#ifndef DIAGCLIMB_SYNTH_H
#define DIAGCLIMB_SYNTH_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagclimb/css_code.h"
#include "diagclimb/gate.h"
#include "diagclimb/gen_coeff.h"

namespace diagclimb {

struct OddComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// C2' = [1,1] (x) C2, C1' = [1,1] (x) C1, y' = [y, y].
CssCode concatenate(const CssCode &code);

struct RemoveZResult {
    CssCode code;
    BitVec w0;
    BitVec gamma0;
    bool admissible = false;
    /// False when the admissibility sum exceeded the budget.
    bool checked = false;
    Cyclo norm;
};

/// Adds w0 to C1. gamma0 is the first Z-stabilizer row pairing oddly with w0,
/// reduced by the new Z-stabilizers. The result is returned even when inadmissible.
RemoveZResult remove_z(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt = {});
/// remove_z with w0 = [1_n, 0_n] on a concatenated code of length 2n.
RemoveZResult theorem2_remove(const CssCode &code, const DiagonalGate &gate, EngineOptions opt = {});
/// Inverse of a removal: adds gamma0 back to the Z-stabilizers.
CssCode add_z(const CssCode &code, const BitVec &gamma0);

struct AddXResult {
    CssCode code;
    BitVec x0;
    BitVec mu0;
    bool admissible = false;
    bool checked = false;
    /// Frame index (old code) and value of a nonvanishing coefficient that should vanish.
    std::optional<std::pair<uint64_t, Cyclo>> witness;
};

/// Adds x0 to C2. mu0 is the first old Z-logical basis row pairing oddly with
/// x0, reduced by the new C2perp.
AddXResult add_x(const CssCode &code, const DiagonalGate &gate, const BitVec &x0, EngineOptions opt = {});
/// Inverse of an addition: keeps the X-stabilizers orthogonal to mu0.
CssCode remove_x(const CssCode &code, const BitVec &mu0);

struct DfsSwitch {
    BitVec y_balanced;
    BitVec x_positions;
};

/// Balances the character vector over the graph whose vertices are qubits in
/// X-stabilizer supports and whose edges are weight-2 Z-stabilizers. Each
/// component contributes its lower-indexed half. Throws OddComponent.
DfsSwitch dfs_switch(const CssCode &code);

struct CodeSummary {
    size_t n = 0;
    size_t k = 0;
    std::optional<WeightResult> d_x;
    std::optional<WeightResult> d_z;
};

CodeSummary summarize(const CssCode &code, bool with_distances, int w_max = kDefaultWMax, int budget_log2 = kDefaultBudgetLog2);

struct SynthStep {
    std::string kind;
    std::string parameter;
    bool admissible = true;
    bool checked = true;
    std::string witness;
    CodeSummary before;
    CodeSummary after;
};

struct PipelineOp {
    enum class Kind { kConcat, kRemoveZ, kAddX, kVerify, kSetGate };
    Kind kind = Kind::kVerify;
    LiftPolicy lift = LiftPolicy::kNextLevelRotation;
    BitVec vec;
    /// Replacement gate for kSetGate; must act on the current length.
    std::optional<DiagonalGate> gate;

    static PipelineOp concat(LiftPolicy lift) {
        PipelineOp op;
        op.kind = Kind::kConcat;
        op.lift = lift;
        return op;
    }
    static PipelineOp remove_z(BitVec w0) {
        PipelineOp op;
        op.kind = Kind::kRemoveZ;
        op.vec = std::move(w0);
        return op;
    }
    static PipelineOp add_x(BitVec x0) {
        PipelineOp op;
        op.kind = Kind::kAddX;
        op.vec = std::move(x0);
        return op;
    }
    static PipelineOp set_gate(DiagonalGate g) {
        PipelineOp op;
        op.kind = Kind::kSetGate;
        op.gate = std::move(g);
        return op;
    }
};

struct PipelineOptions {
    EngineOptions engine;
    bool strict = false;
    bool distances = false;
    int w_max = kDefaultWMax;
};

struct InadmissibleStep : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Applies ops in order to (code, gate). Under strict, throws InadmissibleStep
/// on the first checked inadmissible step; the steps so far stay in `log`.
void run_pipeline(
    CssCode &code,
    DiagonalGate &gate,
    const std::vector<PipelineOp> &ops,
    const PipelineOptions &opt,
    std::vector<SynthStep> &log);

}  // namespace diagclimb

#endif
