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

#include "diagclimb/gate.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace diagclimb {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

LocalDiag::LocalDiag(int num_qubits, int level, std::vector<int64_t> e)
    : num_qubits(num_qubits), level(level), exps(std::move(e)) {
    if (num_qubits < 1 || num_qubits > kBlockCap) {
        throw std::invalid_argument("local block size must be in [1, 3]");
    }
    if (level < 1 || level > Cyclo::kMaxLevel) {
        throw std::out_of_range("local block level outside [1, 8]");
    }
    if (exps.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("local block needs 2^b exponents");
    }
    for (auto &x : exps) {
        x = mod_pos(x, int64_t{1} << level);
    }
}

std::vector<Cyclo> LocalDiag::pauli_table() const {
    size_t size = exps.size();
    std::vector<Cyclo> out;
    for (size_t p = 0; p < size; p++) {
        Cyclo acc = Cyclo::zero(level);
        for (size_t u = 0; u < size; u++) {
            Cyclo term = Cyclo::root(level, exps[u]);
            if (std::popcount(u & p) & 1) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push_back(acc.scaled_pow2(num_qubits));
    }
    return out;
}

LocalDiag elementary_ckz(int controls, int root, bool dagger) {
    if (controls < 0 || root < 0) {
        throw std::invalid_argument("elementary gate parameters must be non-negative");
    }
    if (controls + 1 > kBlockCap) {
        throw std::invalid_argument("elementary gate exceeds the block cap of 3 qubits");
    }
    int level = root + 1;
    int b = controls + 1;
    std::vector<int64_t> e(size_t{1} << b, 0);
    e.back() = dagger ? -1 : 1;
    return LocalDiag(b, level, std::move(e));
}

LocalDiag zrot_block(int l) {
    if (l < 1 || l + 1 > Cyclo::kMaxLevel) {
        throw std::out_of_range("rotation angle index outside [1, 7]");
    }
    return LocalDiag(1, l + 1, {-1, 1});
}

std::string lift_policy_name(LiftPolicy p) {
    switch (p) {
        case LiftPolicy::kIdentityTensor:
            return "identity_tensor";
        case LiftPolicy::kNextLevelRotation:
            return "next_level_rotation";
        case LiftPolicy::kQfdTensor:
            return "qfd_tensor";
    }
    throw std::logic_error("unknown lift policy");
}

LiftPolicy parse_lift_policy(const std::string &name) {
    if (name == "identity_tensor") {
        return LiftPolicy::kIdentityTensor;
    }
    if (name == "next_level_rotation") {
        return LiftPolicy::kNextLevelRotation;
    }
    if (name == "qfd_tensor") {
        return LiftPolicy::kQfdTensor;
    }
    throw std::invalid_argument("unknown lift policy \"" + name + "\"");
}

DiagonalGate DiagonalGate::block_product(size_t n, std::vector<Block> blocks) {
    DiagonalGate g;
    g.kind_ = Kind::kBlockProduct;
    g.n_ = n;
    g.blocks_ = std::move(blocks);
    g.level_ = 1;
    for (const auto &b : g.blocks_) {
        if ((int)b.qubits.size() != b.diag.num_qubits) {
            throw std::invalid_argument("block qubit list does not match its local gate size");
        }
        g.level_ = std::max(g.level_, b.diag.level);
    }
    g.index_blocks();
    return g;
}

void DiagonalGate::index_blocks() {
    block_of_.assign(n_, -1);
    slot_of_.assign(n_, -1);
    tables_.clear();
    for (size_t bi = 0; bi < blocks_.size(); bi++) {
        const auto &b = blocks_[bi];
        for (size_t t = 0; t < b.qubits.size(); t++) {
            size_t q = b.qubits[t];
            if (q >= n_) {
                throw std::out_of_range("block qubit index out of range");
            }
            if (block_of_[q] != -1) {
                throw std::invalid_argument("blocks overlap on qubit " + std::to_string(q));
            }
            block_of_[q] = (int)bi;
            slot_of_[q] = (int)t;
        }
        tables_.push_back(b.diag.pauli_table());
    }
}

DiagonalGate DiagonalGate::qfd(size_t n, int level, std::vector<std::vector<int64_t>> r) {
    if (level < 1 || level > Cyclo::kMaxLevel) {
        throw std::out_of_range("quadratic form gate level outside [1, 8]");
    }
    if (r.size() != n) {
        throw std::invalid_argument("quadratic form matrix must be n x n");
    }
    int64_t m = int64_t{1} << level;
    for (size_t i = 0; i < n; i++) {
        if (r[i].size() != n) {
            throw std::invalid_argument("quadratic form matrix must be n x n");
        }
        for (size_t j = 0; j < n; j++) {
            r[i][j] = mod_pos(r[i][j], m);
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < i; j++) {
            if (r[i][j] != r[j][i]) {
                throw std::invalid_argument("quadratic form matrix must be symmetric");
            }
        }
    }
    DiagonalGate g;
    g.kind_ = Kind::kQfd;
    g.n_ = n;
    g.level_ = level;
    g.r_ = std::move(r);
    return g;
}

DiagonalGate DiagonalGate::transversal_zrot(size_t n, int l) {
    if (n < 1) {
        throw std::invalid_argument("transversal rotation needs n >= 1");
    }
    LocalDiag d = zrot_block(l);
    std::vector<Block> blocks;
    for (size_t q = 0; q < n; q++) {
        blocks.push_back({{q}, d});
    }
    return block_product(n, std::move(blocks));
}

DiagonalGate DiagonalGate::identity(size_t n) {
    return block_product(n, {});
}

std::optional<LocalDiag> DiagonalGate::uniform_single_qubit() const {
    if (kind_ != Kind::kBlockProduct || blocks_.size() != n_ || n_ == 0) {
        return std::nullopt;
    }
    for (const auto &b : blocks_) {
        if (b.diag.num_qubits != 1 || !(b.diag == blocks_[0].diag)) {
            return std::nullopt;
        }
    }
    return blocks_[0].diag;
}

std::optional<int> DiagonalGate::zrot_angle() const {
    auto u = uniform_single_qubit();
    if (!u.has_value() || u->level < 2) {
        return std::nullopt;
    }
    if (*u == zrot_block(u->level - 1)) {
        return u->level - 1;
    }
    return std::nullopt;
}

int64_t DiagonalGate::entry_exponent(const BitVec &u) const {
    if (u.size() != n_) {
        throw std::invalid_argument("entry_exponent: length mismatch");
    }
    int64_t m = int64_t{1} << level_;
    int64_t acc = 0;
    if (kind_ == Kind::kQfd) {
        auto s = u.support();
        for (size_t a = 0; a < s.size(); a++) {
            acc += r_[s[a]][s[a]];
            for (size_t b = a + 1; b < s.size(); b++) {
                acc += 2 * r_[s[a]][s[b]];
            }
            acc %= m;
        }
        return mod_pos(acc, m);
    }
    for (const auto &b : blocks_) {
        size_t p = 0;
        for (size_t t = 0; t < b.qubits.size(); t++) {
            p |= size_t{u.get(b.qubits[t])} << t;
        }
        acc += b.diag.exps[p] << (level_ - b.diag.level);
    }
    return mod_pos(acc, m);
}

Cyclo DiagonalGate::entry(const BitVec &u) const {
    return Cyclo::root(level_, entry_exponent(u));
}

Cyclo DiagonalGate::pauli_coeff(const BitVec &v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("pauli_coeff: length mismatch");
    }
    if (kind_ == Kind::kQfd) {
        if (n_ > kQfdDenseCap) {
            throw std::length_error("pauli_coeff: quadratic form gate too large for dense evaluation");
        }
        int64_t m = int64_t{1} << level_;
        std::vector<int64_t> hist(m, 0);
        uint64_t count = uint64_t{1} << n_;
        BitVec u(n_);
        for (uint64_t i = 0; i < count; i++) {
            u.words()[0] = i;
            int64_t e = entry_exponent(u);
            hist[e] += u.dot(v) ? -1 : 1;
        }
        int64_t half = m / 2;
        std::vector<BigInt> c(half);
        for (int64_t e = 0; e < m; e++) {
            if (e < half) {
                c[e] += hist[e];
            } else {
                c[e - half] -= hist[e];
            }
        }
        return Cyclo(level_, std::move(c), (int)n_);
    }
    for (size_t q = 0; q < n_; q++) {
        if (block_of_[q] < 0 && v.get(q)) {
            return Cyclo::zero(level_);
        }
    }
    Cyclo acc = Cyclo::one(level_);
    for (size_t bi = 0; bi < blocks_.size(); bi++) {
        size_t p = 0;
        const auto &b = blocks_[bi];
        for (size_t t = 0; t < b.qubits.size(); t++) {
            p |= size_t{v.get(b.qubits[t])} << t;
        }
        acc *= tables_[bi][p];
        if (acc.is_zero()) {
            break;
        }
    }
    return acc;
}

std::string DiagonalGate::describe() const {
    std::ostringstream out;
    if (kind_ == Kind::kQfd) {
        out << "qfd(n=" << n_ << ", L=" << level_ << ")";
        return out.str();
    }
    if (auto l = zrot_angle()) {
        out << "transversal_zrot(n=" << n_ << ", l=" << *l << ")";
        return out.str();
    }
    out << "blocks(n=" << n_ << ", count=" << blocks_.size() << ", L=" << level_ << ")";
    return out.str();
}

bool DiagonalGate::operator==(const DiagonalGate &other) const {
    return kind_ == other.kind_ && n_ == other.n_ && level_ == other.level_ && blocks_ == other.blocks_ &&
           r_ == other.r_;
}

DiagonalGate lift(const DiagonalGate &g, LiftPolicy policy) {
    size_t n = g.n();
    switch (policy) {
        case LiftPolicy::kIdentityTensor: {
            if (g.kind() == DiagonalGate::Kind::kQfd) {
                std::vector<std::vector<int64_t>> r(2 * n, std::vector<int64_t>(2 * n, 0));
                for (size_t i = 0; i < n; i++) {
                    for (size_t j = 0; j < n; j++) {
                        r[n + i][n + j] = g.qfd_matrix()[i][j];
                    }
                }
                return DiagonalGate::qfd(2 * n, g.level(), std::move(r));
            }
            std::vector<DiagonalGate::Block> blocks;
            for (auto b : g.blocks()) {
                for (auto &q : b.qubits) {
                    q += n;
                }
                blocks.push_back(std::move(b));
            }
            return DiagonalGate::block_product(2 * n, std::move(blocks));
        }
        case LiftPolicy::kNextLevelRotation: {
            auto l = g.zrot_angle();
            if (!l.has_value()) {
                throw std::invalid_argument("next_level_rotation lift needs a transversal rotation gate");
            }
            return DiagonalGate::transversal_zrot(2 * n, *l + 1);
        }
        case LiftPolicy::kQfdTensor: {
            if (g.kind() != DiagonalGate::Kind::kQfd) {
                throw std::invalid_argument("qfd_tensor lift needs a quadratic form gate");
            }
            std::vector<std::vector<int64_t>> r(2 * n, std::vector<int64_t>(2 * n, 0));
            for (size_t i = 0; i < n; i++) {
                for (size_t j = 0; j < n; j++) {
                    r[i][j] = g.qfd_matrix()[i][j];
                    r[n + i][n + j] = g.qfd_matrix()[i][j];
                }
            }
            return DiagonalGate::qfd(2 * n, g.level() + 1, std::move(r));
        }
    }
    throw std::logic_error("unknown lift policy");
}

}  // namespace diagclimb
