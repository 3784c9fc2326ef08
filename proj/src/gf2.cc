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

#include "diagclimb/gf2.h"

#include <algorithm>
#include <bit>

namespace diagclimb {

RrefResult rref(const BitMat &m) {
    size_t n = m.cols();
    if (n == 0) {
        throw std::invalid_argument("rref of zero-length vectors");
    }
    std::vector<BitVec> rows = m.rows();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < n && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) {
                rows[i] ^= rows[r];
            }
        }
        pivots.push_back(c);
        r++;
    }
    rows.resize(r);
    return {BitMat(n, std::move(rows)), std::move(pivots)};
}

size_t rank(const BitMat &m) {
    if (m.empty()) {
        return 0;
    }
    return rref(m).pivots.size();
}

BitMat dual_basis(const BitMat &m) {
    size_t n = m.cols();
    if (m.empty()) {
        return BitMat::identity(n);
    }
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    // For free column f: e_f plus, for each pivot row having a 1 at f, its pivot.
    std::vector<BitVec> out;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v = BitVec::unit(n, f);
        for (size_t i = 0; i < r.num_rows(); i++) {
            if (r[i].get(f)) {
                v.flip(pivots[i]);
            }
        }
        out.push_back(std::move(v));
    }
    if (out.empty()) {
        return BitMat(n);
    }
    return rref(BitMat(n, std::move(out))).rows;
}

Reducer::Reducer(const BitMat &space) : basis_(space.cols()) {
    if (!space.empty()) {
        auto res = rref(space);
        basis_ = std::move(res.rows);
        pivots_ = std::move(res.pivots);
    }
}

BitVec Reducer::reduce(BitVec v) const {
    if (v.size() != basis_.cols()) {
        throw std::invalid_argument("reduce: length mismatch");
    }
    for (size_t i = 0; i < pivots_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
    return v;
}

bool contains(const BitMat &space, const BitVec &v) {
    return Reducer(space).contains(v);
}

bool is_subspace(const BitMat &sub, const BitMat &sup) {
    Reducer red(sup);
    for (const auto &r : sub.rows()) {
        if (!red.contains(r)) {
            return false;
        }
    }
    return true;
}

bool same_span(const BitMat &a, const BitMat &b) {
    return is_subspace(a, b) && is_subspace(b, a);
}

BitMat quotient_basis(const BitMat &sup, const BitMat &sub) {
    Reducer red(sub);
    if (!is_subspace(sub, sup)) {
        throw std::invalid_argument("coset_reps: sub is not contained in sup");
    }
    BitMat reduced(sup.cols());
    for (const auto &r : sup.rows()) {
        BitVec v = red.reduce(r);
        if (!v.is_zero()) {
            reduced.push_back(std::move(v));
        }
    }
    if (reduced.empty()) {
        return reduced;
    }
    return rref(reduced).rows;
}

std::vector<BitVec> coset_reps(const BitMat &sup, const BitMat &sub) {
    BitMat q = quotient_basis(sup, sub);
    if (q.num_rows() >= 40) {
        throw std::length_error("coset_reps: quotient too large to materialize");
    }
    size_t count = size_t{1} << q.num_rows();
    std::vector<BitVec> out;
    out.reserve(count);
    BitVec cur(sup.cols());
    out.push_back(cur);
    for (size_t a = 1; a < count; a++) {
        out.push_back(q.combine(a));
    }
    return out;
}

namespace {

WeightResult exact_min_weight(const BitMat &small_basis, const BitMat &extra, size_t n) {
    // Gray-code walk over span(small) + span(extra); skip vectors with no extra component.
    std::vector<BitVec> rows = small_basis.rows();
    size_t s = rows.size();
    for (const auto &r : extra.rows()) {
        rows.push_back(r);
    }
    size_t d = rows.size();
    WeightResult best;
    best.weight = n + 1;
    BitVec cur(n);
    uint64_t extra_mask = 0;
    uint64_t count = uint64_t{1} << d;
    for (uint64_t i = 1; i < count; i++) {
        size_t j = std::countr_zero(i);
        cur ^= rows[j];
        if (j >= s) {
            extra_mask ^= uint64_t{1} << (j - s);
        }
        if (extra_mask == 0) {
            continue;
        }
        size_t w = cur.weight();
        if (w < best.weight) {
            best.weight = w;
            best.witness = cur;
            if (w == 1) {
                break;
            }
        }
    }
    return best;
}

WeightResult bounded_min_weight(const BitMat &big, const Reducer &small_red, size_t n, int w_max) {
    BitMat checks = dual_basis(big);
    auto in_big = [&](const BitVec &v) {
        for (const auto &c : checks.rows()) {
            if (c.dot(v)) {
                return false;
            }
        }
        return true;
    };
    for (int w = 1; w <= w_max && (size_t)w <= n; w++) {
        std::vector<size_t> idx(w);
        for (int t = 0; t < w; t++) {
            idx[t] = t;
        }
        while (true) {
            BitVec v(n);
            for (auto i : idx) {
                v.flip(i);
            }
            if (in_big(v) && !small_red.contains(v)) {
                return {(size_t)w, true, v};
            }
            int t = w - 1;
            while (t >= 0 && idx[t] == n - (size_t)(w - t)) {
                t--;
            }
            if (t < 0) {
                break;
            }
            idx[t]++;
            for (int u = t + 1; u < w; u++) {
                idx[u] = idx[u - 1] + 1;
            }
        }
    }
    return {(size_t)w_max + 1, false, BitVec(n)};
}

}  // namespace

WeightResult min_weight_excluding(const BitMat &big, const BitMat &small, int w_max, int budget_log2) {
    if (w_max < 1) {
        throw std::invalid_argument("min_weight_excluding: w_max must be positive");
    }
    size_t n = big.cols();
    BitMat extra = quotient_basis(big, small);
    if (extra.empty()) {
        throw std::invalid_argument("min_weight_excluding: empty difference");
    }
    Reducer small_red(small);
    size_t dim_big = small_red.dim() + extra.num_rows();
    if ((int)dim_big <= budget_log2 && dim_big < 63) {
        return exact_min_weight(small_red.basis(), extra, n);
    }
    return bounded_min_weight(big, small_red, n, w_max);
}

BitMat transpose(const BitMat &m) {
    BitMat out(m.num_rows());
    for (size_t c = 0; c < m.cols(); c++) {
        BitVec col(m.num_rows());
        for (size_t r = 0; r < m.num_rows(); r++) {
            if (m[r].get(c)) {
                col.flip(r);
            }
        }
        out.push_back(std::move(col));
    }
    return out;
}

BitMat multiply(const BitMat &a, const BitMat &b) {
    if (a.cols() != b.num_rows()) {
        throw std::invalid_argument("multiply: shape mismatch");
    }
    BitMat out(b.cols());
    for (const auto &r : a.rows()) {
        out.push_back(b.combine(r));
    }
    return out;
}

BitMat inverse(const BitMat &m) {
    size_t n = m.num_rows();
    if (m.cols() != n) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    if (n == 0) {
        return BitMat(0);
    }
    BitMat aug = BitMat::hstack(m, BitMat::identity(n));
    auto [r, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw std::domain_error("inverse: singular matrix");
    }
    BitMat out(n);
    for (size_t i = 0; i < n; i++) {
        out.push_back(r[i].slice(n, n));
    }
    return out;
}

}  // namespace diagclimb
