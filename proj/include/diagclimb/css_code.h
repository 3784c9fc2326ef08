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

#ifndef DIAGCLIMB_CSS_CODE_H
#define DIAGCLIMB_CSS_CODE_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "diagclimb/bitvec.h"
#include "diagclimb/cyclo.h"
#include "diagclimb/gf2.h"

namespace diagclimb {

struct CommutationViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Deterministic logical frame of a CSS code.
///
/// z_logical_basis rows g_i span C2perp / C1perp (reduced by C1perp);
/// x_logical_basis rows h_i span C1 / C2 (reduced by C2) with h_i . g_j = delta_ij.
/// syndrome_basis spans F2^n / C2perp.
struct LogicalFrame {
    BitMat z_logical_basis;
    BitMat x_logical_basis;
    BitMat syndrome_basis;
};

/// CSS code with X-stabilizers C2 and Z-stabilizers C1perp, C2 inside C1.
///
/// Bases are stored in RREF. The character vector y is stored reduced by C1.
class CssCode {
   public:
    CssCode(size_t n, const BitMat &x_stab, const BitMat &z_stab, const BitVec &y);
    CssCode(size_t n, const BitMat &x_stab, const BitMat &z_stab);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return frame_.z_logical_basis.num_rows();
    }
    /// Basis of C2.
    const BitMat &x_stab() const {
        return x_stab_;
    }
    /// Basis of C1perp.
    const BitMat &z_stab() const {
        return z_stab_;
    }
    const BitVec &y() const {
        return y_;
    }
    /// Basis of C1.
    const BitMat &c1() const {
        return c1_;
    }
    /// Basis of C2perp.
    const BitMat &c2_perp() const {
        return c2_perp_;
    }
    const LogicalFrame &frame() const {
        return frame_;
    }

    /// Z-logical representative g(alpha) = sum_i alpha_i g_i (alpha bit i <-> g_i).
    BitVec z_logical(uint64_t alpha) const;
    /// X-logical representative sum_i alpha_i h_i.
    BitVec x_logical(uint64_t alpha) const;
    /// Frame coordinates of a Z-type vector in C2perp: alpha_i = h_i . v.
    uint64_t z_logical_coords(const BitVec &v) const;
    /// Frame coordinates of an X-type vector in C1: alpha_i = g_i . v.
    uint64_t x_logical_coords(const BitVec &v) const;
    /// Canonical representative of v + C1perp.
    BitVec reduce_z(const BitVec &v) const;

    /// "[[n,k]]".
    std::string params() const;

    /// Same stabilizer spaces and character vector.
    bool operator==(const CssCode &other) const;

   private:
    size_t n_;
    BitMat x_stab_;
    BitMat z_stab_;
    BitVec y_;
    BitMat c1_;
    BitMat c2_perp_;
    LogicalFrame frame_;
};

struct CodeDistances {
    WeightResult d_x;
    WeightResult d_z;
};

/// d_x over C1 \ C2 and d_z over C2perp \ C1perp. Throws when k == 0.
CodeDistances distances(const CssCode &code, int w_max = kDefaultWMax, int budget_log2 = kDefaultBudgetLog2);

/// Sparse basis state (1/sqrt|C2|) sum_{x in C2} (-1)^(r.x) |alpha H + x + y>.
///
/// alpha has k bits (bit i <-> h_i); amplitudes are exact.
std::map<BitVec, Cyclo> encode_basis_state(
    const CssCode &code, const BitVec &alpha, const std::optional<BitVec> &r = std::nullopt);

}  // namespace diagclimb

#endif
