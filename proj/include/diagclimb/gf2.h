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

#ifndef DIAGCLIMB_GF2_H
#define DIAGCLIMB_GF2_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "diagclimb/bitvec.h"

namespace diagclimb {

/// Default enumeration budget, as log2 of the number of vectors visited.
inline constexpr int kDefaultBudgetLog2 = 26;
/// Default weight bound for bounded minimum-weight search.
inline constexpr int kDefaultWMax = 6;

struct RrefResult {
    BitMat rows;
    std::vector<size_t> pivots;
};

/// Reduced row-echelon form with zero rows dropped. Throws on zero-length rows.
RrefResult rref(const BitMat &m);
size_t rank(const BitMat &m);
/// Basis of {v : m v^T = 0}, in reduced row-echelon form.
BitMat dual_basis(const BitMat &m);
bool contains(const BitMat &space, const BitVec &v);
/// True iff rowspace(sub) is a subspace of rowspace(sup).
bool is_subspace(const BitMat &sub, const BitMat &sup);
bool same_span(const BitMat &a, const BitMat &b);

/// Reduction against a fixed row space.
///
/// reduce(v) clears every pivot column of the space's RREF, which yields the
/// reduction-minimal member of v's coset. The map is linear.
class Reducer {
   public:
    explicit Reducer(const BitMat &space);

    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const {
        return reduce(v).is_zero();
    }
    size_t dim() const {
        return basis_.num_rows();
    }
    size_t cols() const {
        return basis_.cols();
    }
    const BitMat &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

   private:
    BitMat basis_;
    std::vector<size_t> pivots_;
};

/// RREF basis of the reduced quotient sup / sub.
///
/// Every vector in the span of the result is already reduced by sub, so
/// rep(alpha) = sum_i alpha_i g_i enumerates canonical coset representatives.
/// Throws std::invalid_argument when sub is not inside sup.
BitMat quotient_basis(const BitMat &sup, const BitMat &sub);

/// All 2^(dim sup - dim sub) canonical coset representatives.
///
/// Entry alpha (as an integer, bit i <-> quotient basis row i) is the sum of
/// the selected quotient basis rows; entry 0 is the zero vector.
std::vector<BitVec> coset_reps(const BitMat &sup, const BitMat &sub);

struct WeightResult {
    /// Exact minimum weight, or w_max + 1 as a lower bound when !exact.
    size_t weight = 0;
    bool exact = true;
    BitVec witness;
};

/// Minimum Hamming weight over rowspace(big) \ rowspace(small).
///
/// Enumerates the whole of `big` when dim(big) <= budget_log2, else every
/// vector of weight <= w_max. Throws std::invalid_argument when small is not
/// inside big or the difference is empty.
WeightResult min_weight_excluding(
    const BitMat &big, const BitMat &small, int w_max = kDefaultWMax, int budget_log2 = kDefaultBudgetLog2);

/// Inverse of a square invertible matrix. Throws std::domain_error if singular.
BitMat inverse(const BitMat &m);
/// Matrix product a * b.
BitMat multiply(const BitMat &a, const BitMat &b);
BitMat transpose(const BitMat &m);

}  // namespace diagclimb

#endif
