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

#ifndef DIAGCLIMB_WALK_H
#define DIAGCLIMB_WALK_H

#include <cstdint>
#include <vector>

#include "diagclimb/bitvec.h"
#include "diagclimb/cyclo.h"
#include "diagclimb/gate.h"

namespace diagclimb {

/// Dense table of 2^m cyclotomic integers at one level, W = 2^(L-1) coefficients each.
///
/// Entry b has value sum_j data[b W + j] zeta^j (no denominator).
struct RawTable {
    int level = 1;
    size_t width = 1;
    size_t count = 0;
    std::vector<int64_t> data;

    void add_root(size_t index, int64_t exponent, bool negate);
    /// In-place Walsh-Hadamard transform over the entry index.
    void walsh_hadamard();
    /// Entry as an exact value divided by 2^denom_exp.
    Cyclo value(size_t index, int denom_exp) const;
    bool is_zero(size_t index) const;
};

/// Tracks the exponent of d_u while u walks a coset by row flips.
class ExponentTracker {
   public:
    ExponentTracker(const DiagonalGate &gate, const BitVec &start, const BitMat &rows);

    int64_t value() const {
        return value_;
    }
    void flip(size_t row);

   private:
    enum class Mode { kUniform, kBlocks, kDense };
    int64_t recompute() const;

    const DiagonalGate &gate_;
    const BitMat &rows_;
    Mode mode_;
    int64_t modulus_;
    BitVec point_;
    int64_t value_ = 0;
    // Uniform mode: d_u = a (n - w) + b w at block level, shifted to gate level.
    int64_t a_ = 0;
    int64_t b_ = 0;
    int shift_ = 0;
    size_t weight_ = 0;
    // Block mode.
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> touched_;
    std::vector<uint32_t> pattern_;
};

/// Maximum log2 of entries held by a RawTable.
inline constexpr int kMaxTableLog2 = 25;

/// Walks c over span(rows) and returns hist with
///   hist[b] = sum_{c : b(c) = b} (-1)^(sign . c) zeta^(e(offset + c)),
/// where bit t of b(c) is chars[t] . c. Cost 2^rows.
RawTable x_side_histogram(
    const DiagonalGate &gate, const BitMat &rows, const BitVec &offset, const BitVec &sign, const BitMat &chars);

/// sum_{w in span(rows)} (-1)^((offset + w) . y) f(offset + w), exact. Cost 2^rows.
Cyclo z_side_sum(const DiagonalGate &gate, const BitMat &rows, const BitVec &offset, const BitVec &y);

}  // namespace diagclimb

#endif
