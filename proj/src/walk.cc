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

#include "diagclimb/walk.h"

#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace diagclimb {

void RawTable::add_root(size_t index, int64_t exponent, bool negate) {
    size_t e = (size_t)exponent;
    if (e >= width) {
        e -= width;
        negate = !negate;
    }
    data[index * width + e] += negate ? -1 : 1;
}

void RawTable::walsh_hadamard() {
    for (size_t h = 1; h < count; h <<= 1) {
        for (size_t i = 0; i < count; i += 2 * h) {
            for (size_t j = i; j < i + h; j++) {
                int64_t *x = &data[j * width];
                int64_t *y = &data[(j + h) * width];
                for (size_t t = 0; t < width; t++) {
                    int64_t a = x[t];
                    int64_t b = y[t];
                    x[t] = a + b;
                    y[t] = a - b;
                }
            }
        }
    }
}

Cyclo RawTable::value(size_t index, int denom_exp) const {
    std::vector<BigInt> c(width);
    for (size_t t = 0; t < width; t++) {
        c[t] = data[index * width + t];
    }
    return Cyclo(level, std::move(c), denom_exp);
}

bool RawTable::is_zero(size_t index) const {
    for (size_t t = 0; t < width; t++) {
        if (data[index * width + t] != 0) {
            return false;
        }
    }
    return true;
}

ExponentTracker::ExponentTracker(const DiagonalGate &gate, const BitVec &start, const BitMat &rows)
    : gate_(gate), rows_(rows), modulus_(int64_t{1} << gate.level()), point_(start) {
    if (start.size() != gate.n() || rows.cols() != gate.n()) {
        throw std::invalid_argument("walk: length mismatch between gate and vectors");
    }
    if (gate.kind() == DiagonalGate::Kind::kQfd) {
        mode_ = Mode::kDense;
        value_ = recompute();
        return;
    }
    if (auto u = gate.uniform_single_qubit()) {
        mode_ = Mode::kUniform;
        a_ = u->exps[0];
        b_ = u->exps[1];
        shift_ = gate.level() - u->level;
        weight_ = point_.weight();
        value_ = recompute();
        return;
    }
    mode_ = Mode::kBlocks;
    const auto &blocks = gate.blocks();
    pattern_.assign(blocks.size(), 0);
    for (size_t q : start.support()) {
        int bi = gate.block_of_qubit()[q];
        if (bi >= 0) {
            pattern_[bi] |= uint32_t{1} << gate.slot_of_qubit()[q];
        }
    }
    touched_.resize(rows.num_rows());
    for (size_t j = 0; j < rows.num_rows(); j++) {
        std::map<uint32_t, uint32_t> masks;
        for (size_t q : rows[j].support()) {
            int bi = gate.block_of_qubit()[q];
            if (bi >= 0) {
                masks[(uint32_t)bi] ^= uint32_t{1} << gate.slot_of_qubit()[q];
            }
        }
        touched_[j].assign(masks.begin(), masks.end());
    }
    value_ = recompute();
}

int64_t ExponentTracker::recompute() const {
    switch (mode_) {
        case Mode::kDense:
            return gate_.entry_exponent(point_);
        case Mode::kUniform: {
            int64_t n = (int64_t)gate_.n();
            int64_t w = (int64_t)weight_;
            int64_t e = (a_ * (n - w) + b_ * w) << shift_;
            return ((e % modulus_) + modulus_) % modulus_;
        }
        case Mode::kBlocks: {
            int64_t e = 0;
            const auto &blocks = gate_.blocks();
            for (size_t bi = 0; bi < blocks.size(); bi++) {
                e += blocks[bi].diag.exps[pattern_[bi]] << (gate_.level() - blocks[bi].diag.level);
            }
            return e % modulus_;
        }
    }
    return 0;
}

void ExponentTracker::flip(size_t row) {
    switch (mode_) {
        case Mode::kDense:
            point_ ^= rows_[row];
            value_ = recompute();
            return;
        case Mode::kUniform: {
            point_ ^= rows_[row];
            weight_ = point_.weight();
            value_ = recompute();
            return;
        }
        case Mode::kBlocks: {
            const auto &blocks = gate_.blocks();
            int64_t e = value_;
            for (auto [bi, mask] : touched_[row]) {
                const auto &d = blocks[bi].diag;
                int s = gate_.level() - d.level;
                e -= d.exps[pattern_[bi]] << s;
                pattern_[bi] ^= mask;
                e += d.exps[pattern_[bi]] << s;
            }
            e %= modulus_;
            value_ = e < 0 ? e + modulus_ : e;
            return;
        }
    }
}

RawTable x_side_histogram(
    const DiagonalGate &gate, const BitMat &rows, const BitVec &offset, const BitVec &sign, const BitMat &chars) {
    size_t d = rows.num_rows();
    size_t m = chars.num_rows();
    if (d >= 63) {
        throw std::length_error("x_side_histogram: walk dimension too large");
    }
    RawTable table;
    table.level = gate.level();
    table.width = size_t{1} << (gate.level() - 1);
    if ((int)m + gate.level() - 1 > kMaxTableLog2) {
        throw std::length_error("x_side_histogram: too many character rows");
    }
    table.count = size_t{1} << m;
    table.data.assign(table.count * table.width, 0);

    std::vector<uint64_t> char_bits(d);
    std::vector<uint8_t> sign_bits(d);
    for (size_t j = 0; j < d; j++) {
        char_bits[j] = chars.products_mask(rows[j]);
        sign_bits[j] = rows[j].dot(sign);
    }
    ExponentTracker tracker(gate, offset, rows);
    uint64_t b = 0;
    bool neg = false;
    table.add_root(0, tracker.value(), false);
    uint64_t total = uint64_t{1} << d;
    for (uint64_t i = 1; i < total; i++) {
        size_t j = std::countr_zero(i);
        tracker.flip(j);
        b ^= char_bits[j];
        neg ^= sign_bits[j];
        table.add_root(b, tracker.value(), neg);
    }
    return table;
}

namespace {

// Products of per-class block Pauli coefficients, keyed by pattern counts.
struct ClassLayout {
    std::vector<LocalDiag> classes;
    std::vector<std::vector<Cyclo>> tables;
    std::vector<size_t> block_class;
    std::vector<size_t> class_size;
    // stride[c][p] for p >= 1; pattern 0 is implied by class_size.
    std::vector<std::vector<uint64_t>> stride;
    unsigned __int128 key_space = 1;
};

ClassLayout make_layout(const DiagonalGate &gate) {
    ClassLayout lay;
    for (const auto &b : gate.blocks()) {
        size_t c = 0;
        while (c < lay.classes.size() && !(lay.classes[c] == b.diag)) {
            c++;
        }
        if (c == lay.classes.size()) {
            lay.classes.push_back(b.diag);
            lay.tables.push_back(b.diag.pauli_table());
            lay.class_size.push_back(0);
        }
        lay.block_class.push_back(c);
        lay.class_size[c]++;
    }
    unsigned __int128 s = 1;
    const unsigned __int128 cap = (unsigned __int128)1 << 100;
    for (size_t c = 0; c < lay.classes.size(); c++) {
        size_t patterns = size_t{1} << lay.classes[c].num_qubits;
        std::vector<uint64_t> st(patterns, 0);
        for (size_t p = 1; p < patterns; p++) {
            st[p] = s > ((unsigned __int128)1 << 63) ? 0 : (uint64_t)s;
            s *= (lay.class_size[c] + 1);
            if (s > cap) {
                s = cap;
            }
        }
        lay.stride.push_back(std::move(st));
    }
    lay.key_space = s;
    return lay;
}

Cyclo class_product(const ClassLayout &lay, uint64_t key, std::vector<std::vector<std::vector<Cyclo>>> &powers) {
    Cyclo acc = Cyclo::one();
    for (size_t c = 0; c < lay.classes.size(); c++) {
        size_t patterns = lay.stride[c].size();
        size_t radix = lay.class_size[c] + 1;
        size_t used = 0;
        for (size_t p = 1; p < patterns; p++) {
            size_t cnt = (size_t)((key / lay.stride[c][p]) % radix);
            used += cnt;
            auto &pw = powers[c][p];
            while (pw.size() <= cnt) {
                pw.push_back(pw.back() * lay.tables[c][p]);
            }
            acc *= pw[cnt];
        }
        size_t zero_cnt = lay.class_size[c] - used;
        auto &pw = powers[c][0];
        while (pw.size() <= zero_cnt) {
            pw.push_back(pw.back() * lay.tables[c][0]);
        }
        acc *= pw[zero_cnt];
        if (acc.is_zero()) {
            break;
        }
    }
    return acc;
}

Cyclo z_side_dense(const DiagonalGate &gate, const BitMat &rows, const BitVec &offset, const BitVec &y) {
    Cyclo acc = Cyclo::zero(gate.level());
    BitVec z = offset;
    uint64_t total = uint64_t{1} << rows.num_rows();
    for (uint64_t i = 0; i < total; i++) {
        if (i) {
            z ^= rows[std::countr_zero(i)];
        }
        Cyclo f = gate.pauli_coeff(z);
        if (z.dot(y)) {
            acc -= f;
        } else {
            acc += f;
        }
    }
    return acc;
}

}  // namespace

Cyclo z_side_sum(const DiagonalGate &gate, const BitMat &rows, const BitVec &offset, const BitVec &y) {
    size_t n = gate.n();
    size_t d = rows.num_rows();
    if (offset.size() != n || y.size() != n || rows.cols() != n) {
        throw std::invalid_argument("z_side_sum: length mismatch");
    }
    if (d >= 63) {
        throw std::length_error("z_side_sum: walk dimension too large");
    }
    if (gate.kind() == DiagonalGate::Kind::kQfd) {
        return z_side_dense(gate, rows, offset, y);
    }
    ClassLayout lay = make_layout(gate);
    if (lay.key_space > ((unsigned __int128)1 << 62)) {
        return z_side_dense(gate, rows, offset, y);
    }

    BitVec uncovered(n);
    for (size_t q = 0; q < n; q++) {
        if (gate.block_of_qubit()[q] < 0) {
            uncovered.flip(q);
        }
    }
    bool uniform = gate.uniform_single_qubit().has_value();

    // Incremental key updates per row.
    std::vector<uint32_t> pattern(gate.blocks().size(), 0);
    for (size_t q : offset.support()) {
        int bi = gate.block_of_qubit()[q];
        if (bi >= 0) {
            pattern[bi] |= uint32_t{1} << gate.slot_of_qubit()[q];
        }
    }
    auto key_of_patterns = [&]() {
        uint64_t key = 0;
        for (size_t bi = 0; bi < pattern.size(); bi++) {
            if (pattern[bi]) {
                key += lay.stride[lay.block_class[bi]][pattern[bi]];
            }
        }
        return key;
    };
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> touched(d);
    std::vector<uint8_t> y_bits(d);
    std::vector<uint8_t> hits_uncovered(d);
    for (size_t j = 0; j < d; j++) {
        std::map<uint32_t, uint32_t> masks;
        for (size_t q : rows[j].support()) {
            int bi = gate.block_of_qubit()[q];
            if (bi >= 0) {
                masks[(uint32_t)bi] ^= uint32_t{1} << gate.slot_of_qubit()[q];
            }
        }
        touched[j].assign(masks.begin(), masks.end());
        y_bits[j] = rows[j].dot(y);
        hits_uncovered[j] = !(rows[j] & uncovered).is_zero();
    }

    bool dense = lay.key_space <= ((unsigned __int128)1 << 22);
    std::vector<int64_t> dense_acc(dense ? (size_t)lay.key_space : 0, 0);
    std::unordered_map<uint64_t, int64_t> sparse_acc;
    auto record = [&](uint64_t key, bool neg) {
        if (dense) {
            dense_acc[key] += neg ? -1 : 1;
        } else {
            sparse_acc[key] += neg ? -1 : 1;
        }
    };

    BitVec z = offset;
    bool neg = offset.dot(y);
    bool z_uncovered = !(z & uncovered).is_zero();
    uint64_t key = uniform ? (uint64_t)z.weight() : key_of_patterns();
    if (!z_uncovered) {
        record(key, neg);
    }
    uint64_t total = uint64_t{1} << d;
    for (uint64_t i = 1; i < total; i++) {
        size_t j = std::countr_zero(i);
        z ^= rows[j];
        neg ^= y_bits[j];
        if (uniform) {
            key = z.weight();
        } else {
            for (auto [bi, mask] : touched[j]) {
                size_t c = lay.block_class[bi];
                if (pattern[bi]) {
                    key -= lay.stride[c][pattern[bi]];
                }
                pattern[bi] ^= mask;
                if (pattern[bi]) {
                    key += lay.stride[c][pattern[bi]];
                }
            }
        }
        if (hits_uncovered[j]) {
            z_uncovered = !(z & uncovered).is_zero();
        }
        if (!z_uncovered) {
            record(key, neg);
        }
    }

    std::vector<std::vector<std::vector<Cyclo>>> powers(lay.classes.size());
    for (size_t c = 0; c < lay.classes.size(); c++) {
        size_t patterns = lay.stride[c].size();
        powers[c].assign(patterns, std::vector<Cyclo>{Cyclo::one()});
    }
    Cyclo acc = Cyclo::zero(gate.level());
    auto add_term = [&](uint64_t k, int64_t count) {
        if (count != 0) {
            acc += Cyclo::integer(count) * class_product(lay, k, powers);
        }
    };
    if (dense) {
        for (size_t k = 0; k < dense_acc.size(); k++) {
            add_term(k, dense_acc[k]);
        }
    } else {
        std::map<uint64_t, int64_t> ordered(sparse_acc.begin(), sparse_acc.end());
        for (auto [k, count] : ordered) {
            add_term(k, count);
        }
    }
    return acc;
}

}  // namespace diagclimb
