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

#ifndef DIAGCLIMB_GEN_COEFF_H
#define DIAGCLIMB_GEN_COEFF_H

#include <cstdint>
#include <optional>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagclimb/css_code.h"
#include "diagclimb/cyclo.h"
#include "diagclimb/gate.h"

namespace diagclimb {

struct BudgetExceeded : std::runtime_error {
    int required_log2;
    BudgetExceeded(const std::string &what, int required)
        : std::runtime_error(what + " (needs 2^" + std::to_string(required) + " terms)"), required_log2(required) {
    }
};

struct NotPreserved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnimodularEntry : std::runtime_error {
    uint64_t beta;
    NonUnimodularEntry(uint64_t beta, const std::string &value)
        : std::runtime_error("logical entry " + std::to_string(beta) + " is not a root of unity: " + value),
          beta(beta) {
    }
};

enum class Side { kAuto, kX, kZ };

struct EngineOptions {
    int budget_log2 = kDefaultBudgetLog2;
    Side side = Side::kAuto;
};

/// Exact A_{mu,gamma}. The X side walks C1 (cost 2^dim C1), the Z side walks
/// C1perp + mu + gamma (cost 2^dim C1perp, block gates only).
Cyclo coefficient(
    const CssCode &code, const DiagonalGate &gate, const BitVec &mu, const BitVec &gamma, EngineOptions opt = {});

/// Coefficients A_{mu, g(alpha)} for a list of frame indices alpha.
struct GenCoeffRow {
    BitVec mu;
    std::vector<uint64_t> alphas;
    std::vector<BitVec> gammas;
    std::vector<Cyclo> values;
    /// False when alphas is not the full set 0 .. 2^k - 1.
    bool full = true;
};

/// All 2^k entries of the row for syndrome representative mu.
GenCoeffRow coefficient_row(const CssCode &code, const DiagonalGate &gate, const BitVec &mu, EngineOptions opt = {});
GenCoeffRow trivial_row(const CssCode &code, const DiagonalGate &gate, EngineOptions opt = {});
/// Entries for the requested frame indices only.
GenCoeffRow sampled_row(
    const CssCode &code,
    const DiagonalGate &gate,
    const BitVec &mu,
    const std::vector<uint64_t> &alphas,
    EngineOptions opt = {});

/// Rows for every syndrome mu_t = sum_i t_i s_i over the frame's syndrome basis.
std::vector<GenCoeffRow> full_table(const CssCode &code, const DiagonalGate &gate, EngineOptions opt = {});

/// Sum of |entry|^2 over a row, exact.
Cyclo row_norm(const GenCoeffRow &row);

struct Preservation {
    bool preserved = false;
    Cyclo norm;
};

Preservation is_preserved(const CssCode &code, const DiagonalGate &gate, EngineOptions opt = {});

/// s_{g(alpha)}(w0) = |C1|^-1 sum_{u in C1 + w0} (-1)^(g(alpha).u) d_{u+y}, indexed by alpha.
/// Throws std::invalid_argument when w0 is in C1.
std::vector<Cyclo> split_values(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt = {});

/// Sum over the split code's trivial row of |A'|^2 after removing w0:
/// (sum_gamma |A_{0,gamma}|^2 + sum_gamma |s_gamma(w0)|^2) / 2.
Cyclo split_norm(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt = {});

/// First frame index alpha with g(alpha) . x0 = 1 and A_{0,g(alpha)} != 0, with its value.
std::optional<std::pair<uint64_t, Cyclo>> addition_witness(
    const CssCode &code, const DiagonalGate &gate, const BitVec &x0, EngineOptions opt = {});

/// Logical diagonal in the code's frame: entry beta is zeta_{2^level}^exps[beta].
struct LogicalDiagonal {
    size_t k = 0;
    int level = 1;
    std::vector<int64_t> exps;
    std::vector<Cyclo> entries;
};

/// Entry beta = sum_alpha A_{0,g(alpha)} (-1)^(alpha.beta). Throws NotPreserved
/// or NonUnimodularEntry.
LogicalDiagonal induced_logical(const CssCode &code, const DiagonalGate &gate, EngineOptions opt = {});
/// Same transform applied to an already computed full trivial row.
LogicalDiagonal logical_from_row(const GenCoeffRow &row, int level);

}  // namespace diagclimb

#endif
