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

#ifndef DIAGCLIMB_ORACLE_H
#define DIAGCLIMB_ORACLE_H

#include <complex>
#include <string>
#include <vector>

#include "diagclimb/css_code.h"
#include "diagclimb/gate.h"
#include "diagclimb/gen_coeff.h"

namespace diagclimb {

/// Largest log2 of (2^(2k) |C2|) terms the oracle accepts.
inline constexpr int kOracleCapLog2 = 28;
inline constexpr double kOracleTolerance = 1e-9;

/// M[beta][alpha] = <encode(beta)| U |encode(alpha)>, in floating point.
struct LogicalBlock {
    size_t k = 0;
    std::vector<std::complex<double>> entries;

    std::complex<double> at(size_t beta, size_t alpha) const {
        return entries[(beta << k) | alpha];
    }
};

/// Entry d_u evaluated in floating point from the gate definition.
std::complex<double> float_entry(const DiagonalGate &gate, const BitVec &u);

LogicalBlock logical_block(const CssCode &code, const DiagonalGate &gate);

struct CrosscheckReport {
    bool oracle_unitary = false;
    bool exact_preserved = false;
    double unitarity_deviation = 0;
    double diagonal_deviation = 0;
    double offdiagonal_max = 0;
    double row_deviation = 0;
    std::string witness;
    double tol = kOracleTolerance;

    bool verdicts_agree() const {
        return oracle_unitary == exact_preserved;
    }
    /// Verdicts agree, exact and numeric values agree, and a preserved code has
    /// a diagonal block.
    bool ok() const;
};

/// Compares the oracle block against the exact engine on (code, gate).
CrosscheckReport crosscheck(
    const CssCode &code, const DiagonalGate &gate, double tol = kOracleTolerance, EngineOptions opt = {});
/// Compares the oracle block of (code, gate) against a supplied exact trivial row.
CrosscheckReport crosscheck(
    const CssCode &code, const DiagonalGate &gate, const GenCoeffRow &row, double tol = kOracleTolerance);

}  // namespace diagclimb

#endif
