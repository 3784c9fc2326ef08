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

#ifndef DIAGCLIMB_GATE_H
#define DIAGCLIMB_GATE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diagclimb/bitvec.h"
#include "diagclimb/cyclo.h"

namespace diagclimb {

/// Largest number of qubits in one local block.
inline constexpr int kBlockCap = 3;

/// Diagonal gate on b qubits: entry u is zeta_{2^L}^exps[u].
///
/// Bit t of the pattern index u is the block's t-th qubit.
struct LocalDiag {
    int num_qubits = 1;
    int level = 1;
    std::vector<int64_t> exps;

    LocalDiag() = default;
    LocalDiag(int num_qubits, int level, std::vector<int64_t> exps);

    /// Pauli coefficients f(p) = 2^-b sum_u (-1)^(u.p) zeta^exps[u].
    std::vector<Cyclo> pauli_table() const;
    bool operator==(const LocalDiag &other) const = default;
};

/// C^(i)Z^(1/2^j) (or its inverse) on i + 1 qubits, at level j + 1.
LocalDiag elementary_ckz(int controls, int root, bool dagger);
/// exp(-i pi/2^l Z): entries (zeta^-1, zeta) at level l + 1.
LocalDiag zrot_block(int l);

enum class LiftPolicy { kIdentityTensor, kNextLevelRotation, kQfdTensor };

std::string lift_policy_name(LiftPolicy p);
LiftPolicy parse_lift_policy(const std::string &name);

/// Diagonal physical gate: a product of disjoint local blocks, or a quadratic
/// form gate with entries zeta_{2^L}^(u R u^T).
class DiagonalGate {
   public:
    enum class Kind { kBlockProduct, kQfd };

    struct Block {
        std::vector<size_t> qubits;
        LocalDiag diag;
        bool operator==(const Block &other) const = default;
    };

    DiagonalGate() = default;

    static DiagonalGate block_product(size_t n, std::vector<Block> blocks);
    static DiagonalGate qfd(size_t n, int level, std::vector<std::vector<int64_t>> r);
    static DiagonalGate transversal_zrot(size_t n, int l);
    static DiagonalGate identity(size_t n);

    Kind kind() const {
        return kind_;
    }
    size_t n() const {
        return n_;
    }
    /// Common level of all entries.
    int level() const {
        return level_;
    }
    const std::vector<Block> &blocks() const {
        return blocks_;
    }
    const std::vector<std::vector<int64_t>> &qfd_matrix() const {
        return r_;
    }
    /// l when this is exactly transversal_zrot(n, l).
    std::optional<int> zrot_angle() const;
    /// The shared block when every qubit carries the same single-qubit block.
    std::optional<LocalDiag> uniform_single_qubit() const;
    /// Block index covering each qubit, or -1.
    const std::vector<int> &block_of_qubit() const {
        return block_of_;
    }
    /// Position of each qubit inside its block.
    const std::vector<int> &slot_of_qubit() const {
        return slot_of_;
    }

    /// Exponent of entry u at level().
    int64_t entry_exponent(const BitVec &u) const;
    Cyclo entry(const BitVec &u) const;
    /// f(v) = 2^-n sum_u (-1)^(u.v) d_u.
    Cyclo pauli_coeff(const BitVec &v) const;

    std::string describe() const;
    bool operator==(const DiagonalGate &other) const;

   private:
    void index_blocks();

    Kind kind_ = Kind::kBlockProduct;
    size_t n_ = 0;
    int level_ = 1;
    std::vector<Block> blocks_;
    std::vector<std::vector<int64_t>> r_;
    std::vector<int> block_of_;
    std::vector<int> slot_of_;
    std::vector<std::vector<Cyclo>> tables_;
};

/// Gate on 2n qubits whose entry at [u, u] equals entry u of g.
DiagonalGate lift(const DiagonalGate &g, LiftPolicy policy);

/// Largest n for which the quadratic-form Pauli coefficient is computed densely.
inline constexpr size_t kQfdDenseCap = 20;

}  // namespace diagclimb

#endif
