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

#include "diagclimb/css_code.h"

#include <bit>

namespace diagclimb {

namespace {

BitMat canonical_basis(const BitMat &m) {
    if (m.empty()) {
        return BitMat(m.cols());
    }
    return rref(m).rows;
}

}  // namespace

CssCode::CssCode(size_t n, const BitMat &x_stab, const BitMat &z_stab) : CssCode(n, x_stab, z_stab, BitVec(n)) {
}

CssCode::CssCode(size_t n, const BitMat &x_stab, const BitMat &z_stab, const BitVec &y) : n_(n) {
    if (n == 0) {
        throw LengthMismatch("code length must be positive");
    }
    if (x_stab.cols() != n || z_stab.cols() != n || y.size() != n) {
        throw LengthMismatch("stabilizer or character length differs from n = " + std::to_string(n));
    }
    for (const auto &a : x_stab.rows()) {
        for (const auto &b : z_stab.rows()) {
            if (a.dot(b)) {
                throw CommutationViolation("X-stabilizer " + a.str() + " anticommutes with Z-stabilizer " + b.str());
            }
        }
    }
    x_stab_ = canonical_basis(x_stab);
    z_stab_ = canonical_basis(z_stab);
    c1_ = dual_basis(z_stab_);
    c2_perp_ = dual_basis(x_stab_);
    y_ = Reducer(c1_).reduce(y);

    BitMat g = quotient_basis(c2_perp_, z_stab_);
    BitMat h0 = quotient_basis(c1_, x_stab_);
    BitMat pairing = multiply(h0, transpose(g));
    BitMat h = multiply(inverse(pairing), h0);
    Reducer c2_red(x_stab_);
    BitMat h_red(n);
    for (const auto &row : h.rows()) {
        h_red.push_back(c2_red.reduce(row));
    }
    frame_.z_logical_basis = std::move(g);
    frame_.x_logical_basis = std::move(h_red);
    frame_.syndrome_basis = quotient_basis(BitMat::identity(n), c2_perp_);
}

BitVec CssCode::z_logical(uint64_t alpha) const {
    return frame_.z_logical_basis.combine(alpha);
}

BitVec CssCode::x_logical(uint64_t alpha) const {
    return frame_.x_logical_basis.combine(alpha);
}

uint64_t CssCode::z_logical_coords(const BitVec &v) const {
    return frame_.x_logical_basis.products_mask(v);
}

uint64_t CssCode::x_logical_coords(const BitVec &v) const {
    return frame_.z_logical_basis.products_mask(v);
}

BitVec CssCode::reduce_z(const BitVec &v) const {
    return Reducer(z_stab_).reduce(v);
}

std::string CssCode::params() const {
    return "[[" + std::to_string(n_) + "," + std::to_string(k()) + "]]";
}

bool CssCode::operator==(const CssCode &other) const {
    return n_ == other.n_ && x_stab_ == other.x_stab_ && z_stab_ == other.z_stab_ && y_ == other.y_;
}

CodeDistances distances(const CssCode &code, int w_max, int budget_log2) {
    if (code.k() == 0) {
        throw std::invalid_argument("distances: code has no logical qubits");
    }
    return {
        min_weight_excluding(code.c1(), code.x_stab(), w_max, budget_log2),
        min_weight_excluding(code.c2_perp(), code.z_stab(), w_max, budget_log2),
    };
}

std::map<BitVec, Cyclo> encode_basis_state(const CssCode &code, const BitVec &alpha, const std::optional<BitVec> &r) {
    if (alpha.size() != code.k()) {
        throw LengthMismatch("encode_basis_state: alpha needs k = " + std::to_string(code.k()) + " bits");
    }
    if (r.has_value() && r->size() != code.n()) {
        throw LengthMismatch("encode_basis_state: r needs n bits");
    }
    size_t d = code.x_stab().num_rows();
    if (d > 30) {
        throw std::length_error("encode_basis_state: |C2| too large");
    }
    // 2^(-d/2) = 2^(-ceil(d/2)) * sqrt(2)^(d mod 2).
    Cyclo amp = Cyclo::dyadic(1, (int)((d + 1) / 2));
    if (d % 2) {
        amp = amp * Cyclo::sqrt2();
    }
    BitVec base = code.frame().x_logical_basis.combine(alpha) ^ code.y();
    std::map<BitVec, Cyclo> out;
    BitVec x(code.n());
    bool sign = false;
    uint64_t count = uint64_t{1} << d;
    for (uint64_t i = 0; i < count; i++) {
        if (i) {
            size_t j = std::countr_zero(i);
            x ^= code.x_stab()[j];
            if (r.has_value()) {
                sign ^= code.x_stab()[j].dot(*r);
            }
        }
        out.emplace(base ^ x, sign ? -amp : amp);
    }
    return out;
}

}  // namespace diagclimb
