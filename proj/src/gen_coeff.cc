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

#include "diagclimb/gen_coeff.h"

#include "diagclimb/walk.h"

#include <bit>

namespace diagclimb {

namespace {

int dim_c1(const CssCode &code) {
    return (int)code.c1().num_rows();
}

int dim_c1_perp(const CssCode &code) {
    return (int)code.z_stab().num_rows();
}

bool z_side_possible(const DiagonalGate &gate) {
    return gate.kind() == DiagonalGate::Kind::kBlockProduct || gate.n() <= kQfdDenseCap;
}

// Chooses the side for `terms` independent sums on one code.
Side choose_side(const CssCode &code, const DiagonalGate &gate, const EngineOptions &opt) {
    int dx = dim_c1(code);
    int dz = dim_c1_perp(code);
    Side side = opt.side;
    if (side == Side::kAuto) {
        side = (dz < dx && z_side_possible(gate)) ? Side::kZ : Side::kX;
        if (side == Side::kX && gate.kind() == DiagonalGate::Kind::kQfd && dx > opt.budget_log2 &&
            z_side_possible(gate)) {
            side = Side::kZ;
        }
    }
    int need = side == Side::kX ? dx : dz;
    if (need > opt.budget_log2) {
        throw BudgetExceeded("coefficient enumeration exceeds budget", std::min(dx, dz));
    }
    if (side == Side::kZ && !z_side_possible(gate)) {
        throw std::length_error("Z-side sum needs a block gate or a small quadratic form gate");
    }
    return side;
}

bool row_table_fits(const CssCode &code, const DiagonalGate &gate) {
    return (int)code.k() + gate.level() - 1 <= kMaxTableLog2;
}

BigInt from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    BigInt out = BigInt((uint64_t)(u >> 64));
    out <<= 64;
    out += BigInt((uint64_t)u);
    return neg ? BigInt(-out) : out;
}

// Sum over entries of |hist[b]|^2 as a W-coefficient vector.
Cyclo table_norm(const RawTable &t, int denom_exp) {
    size_t w = t.width;
    std::vector<__int128> acc(w, 0);
    std::vector<int64_t> conj(w);
    for (size_t b = 0; b < t.count; b++) {
        const int64_t *a = &t.data[b * w];
        bool any = false;
        for (size_t j = 0; j < w; j++) {
            any |= a[j] != 0;
        }
        if (!any) {
            continue;
        }
        conj[0] = a[0];
        for (size_t j = 1; j < w; j++) {
            conj[w - j] = -a[j];
        }
        for (size_t i = 0; i < w; i++) {
            if (!a[i]) {
                continue;
            }
            for (size_t j = 0; j < w; j++) {
                __int128 p = (__int128)a[i] * conj[j];
                if (i + j < w) {
                    acc[i + j] += p;
                } else {
                    acc[i + j - w] -= p;
                }
            }
        }
    }
    std::vector<BigInt> c(w);
    for (size_t j = 0; j < w; j++) {
        c[j] = from_i128(acc[j]);
    }
    return Cyclo(t.level, std::move(c), denom_exp);
}

// Histogram over frame characters for syndrome mu (before the transform).
RawTable row_histogram(const CssCode &code, const DiagonalGate &gate, const BitVec &mu) {
    return x_side_histogram(gate, code.c1(), code.y(), mu, code.frame().z_logical_basis);
}

}  // namespace

Cyclo coefficient(const CssCode &code, const DiagonalGate &gate, const BitVec &mu, const BitVec &gamma, EngineOptions opt) {
    if (gate.n() != code.n() || mu.size() != code.n() || gamma.size() != code.n()) {
        throw std::invalid_argument("coefficient: length mismatch");
    }
    Side side = choose_side(code, gate, opt);
    BitVec shift = mu ^ gamma;
    if (side == Side::kX) {
        RawTable t = x_side_histogram(gate, code.c1(), code.y(), shift, BitMat(code.n()));
        return t.value(0, dim_c1(code));
    }
    return z_side_sum(gate, code.z_stab(), shift, code.y());
}

GenCoeffRow coefficient_row(const CssCode &code, const DiagonalGate &gate, const BitVec &mu, EngineOptions opt) {
    if (code.k() > 40) {
        throw std::length_error("coefficient_row: too many logical qubits for a full row");
    }
    uint64_t count = uint64_t{1} << code.k();
    std::vector<uint64_t> alphas(count);
    for (uint64_t a = 0; a < count; a++) {
        alphas[a] = a;
    }
    GenCoeffRow row = sampled_row(code, gate, mu, alphas, opt);
    row.full = true;
    return row;
}

GenCoeffRow trivial_row(const CssCode &code, const DiagonalGate &gate, EngineOptions opt) {
    return coefficient_row(code, gate, BitVec(code.n()), opt);
}

GenCoeffRow sampled_row(
    const CssCode &code,
    const DiagonalGate &gate,
    const BitVec &mu,
    const std::vector<uint64_t> &alphas,
    EngineOptions opt) {
    if (gate.n() != code.n() || mu.size() != code.n()) {
        throw std::invalid_argument("sampled_row: length mismatch");
    }
    GenCoeffRow row;
    row.mu = mu;
    row.alphas = alphas;
    row.full = code.k() < 64 && alphas.size() == (size_t{1} << code.k());
    for (auto a : alphas) {
        if (code.k() < 64 && (a >> code.k()) != 0) {
            throw std::out_of_range("sampled_row: frame index out of range");
        }
        row.gammas.push_back(code.z_logical(a));
    }
    Side side = choose_side(code, gate, opt);
    bool one_walk = side == Side::kX && row_table_fits(code, gate) &&
                    (alphas.size() > 1 || opt.side == Side::kX);
    if (one_walk) {
        RawTable t = row_histogram(code, gate, mu);
        t.walsh_hadamard();
        for (auto a : alphas) {
            row.values.push_back(t.value(a, dim_c1(code)));
        }
        return row;
    }
    EngineOptions single = opt;
    single.side = side;
    for (const auto &g : row.gammas) {
        row.values.push_back(coefficient(code, gate, mu, g, single));
    }
    return row;
}

std::vector<GenCoeffRow> full_table(const CssCode &code, const DiagonalGate &gate, EngineOptions opt) {
    const BitMat &sb = code.frame().syndrome_basis;
    if (sb.num_rows() > 20) {
        throw std::length_error("full_table: too many syndromes");
    }
    std::vector<GenCoeffRow> out;
    uint64_t count = uint64_t{1} << sb.num_rows();
    for (uint64_t t = 0; t < count; t++) {
        out.push_back(coefficient_row(code, gate, sb.combine(t), opt));
    }
    return out;
}

Cyclo row_norm(const GenCoeffRow &row) {
    Cyclo acc;
    for (const auto &v : row.values) {
        acc += v.abs_sq();
    }
    return acc;
}

Preservation is_preserved(const CssCode &code, const DiagonalGate &gate, EngineOptions opt) {
    Side side = choose_side(code, gate, opt);
    Preservation out;
    if (side == Side::kX && row_table_fits(code, gate)) {
        // Parseval: sum_alpha |A(alpha)|^2 = 2^k sum_b |hist[b]|^2 / |C1|^2.
        RawTable t = row_histogram(code, gate, BitVec(code.n()));
        out.norm = table_norm(t, 2 * dim_c1(code) - (int)code.k());
    } else {
        out.norm = row_norm(trivial_row(code, gate, opt));
    }
    out.preserved = out.norm == Cyclo::one();
    return out;
}

std::vector<Cyclo> split_values(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt) {
    if (w0.size() != code.n() || gate.n() != code.n()) {
        throw std::invalid_argument("split_values: length mismatch");
    }
    if (contains(code.c1(), w0)) {
        throw std::invalid_argument("split_values: w0 lies in C1, so no new logical arises");
    }
    uint64_t count = uint64_t{1} << code.k();
    std::vector<Cyclo> out;
    int dx = dim_c1(code);
    int dz = dim_c1_perp(code) - 1;
    bool use_x = opt.side == Side::kX || (opt.side == Side::kAuto && (dx <= dz || !z_side_possible(gate)));
    if (use_x && row_table_fits(code, gate)) {
        if (dx > opt.budget_log2) {
            throw BudgetExceeded("split enumeration exceeds budget", std::min(dx, dz));
        }
        RawTable t = x_side_histogram(gate, code.c1(), w0 ^ code.y(), BitVec(code.n()), code.frame().z_logical_basis);
        t.walsh_hadamard();
        for (uint64_t a = 0; a < count; a++) {
            Cyclo v = t.value(a, dx);
            out.push_back(code.z_logical(a).dot(w0) ? -v : v);
        }
        return out;
    }
    if (dz > opt.budget_log2) {
        throw BudgetExceeded("split enumeration exceeds budget", std::min(dx, dz));
    }
    // s_gamma = A'_{0,gamma} - A'_{0,gamma + gamma0} on the enlarged C1, same y.
    BitMat c1_new = code.c1();
    c1_new.push_back(w0);
    BitMat z_new = dual_basis(c1_new);
    BitVec gamma0;
    for (const auto &r : code.z_stab().rows()) {
        if (r.dot(w0)) {
            gamma0 = r;
            break;
        }
    }
    for (uint64_t a = 0; a < count; a++) {
        BitVec g = code.z_logical(a);
        Cyclo plus = z_side_sum(gate, z_new, g, code.y());
        Cyclo minus = z_side_sum(gate, z_new, g ^ gamma0, code.y());
        out.push_back(plus - minus);
    }
    return out;
}

Cyclo split_norm(const CssCode &code, const DiagonalGate &gate, const BitVec &w0, EngineOptions opt) {
    if (w0.size() != code.n() || gate.n() != code.n()) {
        throw std::invalid_argument("split_norm: length mismatch");
    }
    if (contains(code.c1(), w0)) {
        throw std::invalid_argument("split_norm: w0 lies in C1, so no new logical arises");
    }
    int dx = dim_c1(code);
    if (dx <= opt.budget_log2 && opt.side != Side::kZ && row_table_fits(code, gate)) {
        int denom = 2 * dx - (int)code.k();
        RawTable a = row_histogram(code, gate, BitVec(code.n()));
        RawTable s = x_side_histogram(gate, code.c1(), w0 ^ code.y(), BitVec(code.n()), code.frame().z_logical_basis);
        return (table_norm(a, denom) + table_norm(s, denom)).scaled_pow2(1);
    }
    GenCoeffRow row = trivial_row(code, gate, opt);
    Cyclo acc = row_norm(row);
    for (const auto &v : split_values(code, gate, w0, opt)) {
        acc += v.abs_sq();
    }
    return acc.scaled_pow2(1);
}

std::optional<std::pair<uint64_t, Cyclo>> addition_witness(
    const CssCode &code, const DiagonalGate &gate, const BitVec &x0, EngineOptions opt) {
    if (x0.size() != code.n() || gate.n() != code.n()) {
        throw std::invalid_argument("addition_witness: length mismatch");
    }
    uint64_t pair_mask = code.x_logical_coords(x0);
    int dx = dim_c1(code);
    if (dx <= opt.budget_log2 && opt.side != Side::kZ && row_table_fits(code, gate)) {
        RawTable t = row_histogram(code, gate, BitVec(code.n()));
        t.walsh_hadamard();
        for (uint64_t a = 0; a < t.count; a++) {
            if ((std::popcount(a & pair_mask) & 1) && !t.is_zero(a)) {
                return std::make_pair(a, t.value(a, dx));
            }
        }
        return std::nullopt;
    }
    GenCoeffRow row = trivial_row(code, gate, opt);
    for (size_t i = 0; i < row.values.size(); i++) {
        if ((std::popcount(row.alphas[i] & pair_mask) & 1) && !row.values[i].is_zero()) {
            return std::make_pair(row.alphas[i], row.values[i]);
        }
    }
    return std::nullopt;
}

LogicalDiagonal logical_from_row(const GenCoeffRow &row, int level) {
    if (!row.full) {
        throw std::invalid_argument("logical_from_row needs a full row");
    }
    size_t count = row.values.size();
    std::vector<Cyclo> d = row.values;
    for (size_t h = 1; h < count; h <<= 1) {
        for (size_t i = 0; i < count; i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                Cyclo a = d[j];
                d[j] = a + d[j + h];
                d[j + h] = a - d[j + h];
            }
        }
    }
    LogicalDiagonal out;
    out.k = (size_t)std::countr_zero(count);
    out.level = level;
    for (size_t b = 0; b < count; b++) {
        Cyclo e = d[b].level() < level ? d[b].promote(level) : d[b];
        auto r = e.as_root_of_unity();
        if (!r.has_value() || e.level() != level) {
            throw NonUnimodularEntry(b, d[b].str());
        }
        out.exps.push_back(*r);
        out.entries.push_back(e);
    }
    return out;
}

LogicalDiagonal induced_logical(const CssCode &code, const DiagonalGate &gate, EngineOptions opt) {
    Side side = choose_side(code, gate, opt);
    if (side == Side::kX && row_table_fits(code, gate)) {
        RawTable t = row_histogram(code, gate, BitVec(code.n()));
        Cyclo norm = table_norm(t, 2 * dim_c1(code) - (int)code.k());
        if (norm != Cyclo::one()) {
            throw NotPreserved("gate does not preserve the code (norm " + norm.str() + ")");
        }
        // Entry beta = 2^k hist[beta] / |C1| = hist[beta] / |C2|.
        LogicalDiagonal out;
        out.k = code.k();
        out.level = gate.level();
        int denom = (int)code.x_stab().num_rows();
        for (size_t b = 0; b < t.count; b++) {
            Cyclo e = t.value(b, denom);
            auto r = e.as_root_of_unity();
            if (!r.has_value()) {
                throw NonUnimodularEntry(b, e.str());
            }
            out.exps.push_back(*r);
            out.entries.push_back(e);
        }
        return out;
    }
    GenCoeffRow row = trivial_row(code, gate, opt);
    if (row_norm(row) != Cyclo::one()) {
        throw NotPreserved("gate does not preserve the code");
    }
    return logical_from_row(row, gate.level());
}

}  // namespace diagclimb
