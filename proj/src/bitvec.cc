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

#include "diagclimb/bitvec.h"

#include <stdexcept>

namespace diagclimb {

namespace {

void require_same_size(size_t a, size_t b) {
    if (a != b) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

BitVec::BitVec(size_t n) : num_bits_(n), words_((n + 63) / 64, 0) {
}

BitVec BitVec::from_str(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        char c = bits[i];
        if (c == '1') {
            v.flip(i);
        } else if (c != '0') {
            throw std::invalid_argument("bad bit character '" + std::string(1, c) + "' in \"" + std::string(bits) + "\"");
        }
    }
    return v;
}

BitVec BitVec::ones(size_t n) {
    BitVec v(n);
    for (auto &w : v.words_) {
        w = ~uint64_t{0};
    }
    if (n % 64 != 0) {
        v.words_.back() = (uint64_t{1} << (n % 64)) - 1;
    }
    return v;
}

BitVec BitVec::unit(size_t n, size_t index) {
    if (index >= n) {
        throw std::out_of_range("unit vector index out of range");
    }
    BitVec v(n);
    v.flip(index);
    return v;
}

BitVec BitVec::from_mask(size_t n, uint64_t mask) {
    if (n > 64) {
        throw std::invalid_argument("from_mask requires n <= 64");
    }
    BitVec v(n);
    if (n > 0) {
        v.words_[0] = n == 64 ? mask : (mask & ((uint64_t{1} << n) - 1));
    }
    return v;
}

void BitVec::set(size_t i, bool value) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_size(num_bits_, other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    require_same_size(num_bits_, other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    require_same_size(num_bits_, other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::is_zero() const {
    for (auto w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BitVec::dot(const BitVec &other) const {
    require_same_size(num_bits_, other.num_bits_);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

long BitVec::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (long)(k * 64 + std::countr_zero(words_[k]));
        }
    }
    return -1;
}

BitVec BitVec::concat(const BitVec &other) const {
    BitVec out(num_bits_ + other.num_bits_);
    for (size_t k = 0; k < words_.size(); k++) {
        out.words_[k] = words_[k];
    }
    for (size_t i = 0; i < other.num_bits_; i++) {
        if (other.get(i)) {
            out.flip(num_bits_ + i);
        }
    }
    return out;
}

BitVec BitVec::slice(size_t begin, size_t len) const {
    if (begin + len > num_bits_) {
        throw std::out_of_range("slice out of range");
    }
    BitVec out(len);
    for (size_t i = 0; i < len; i++) {
        if (get(begin + i)) {
            out.flip(i);
        }
    }
    return out;
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            // The lowest differing coordinate decides; a set bit there sorts later.
            uint64_t bit = diff & (~diff + 1);
            return (words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

BitMat::BitMat(size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        require_same_size(r.size(), cols_);
    }
}

BitMat BitMat::from_strs(const std::vector<std::string> &rows, size_t cols) {
    if (!rows.empty()) {
        cols = rows[0].size();
    }
    BitMat m(cols);
    for (const auto &r : rows) {
        m.push_back(BitVec::from_str(r));
    }
    return m;
}

BitMat BitMat::identity(size_t n) {
    BitMat m(n);
    for (size_t i = 0; i < n; i++) {
        m.push_back(BitVec::unit(n, i));
    }
    return m;
}

void BitMat::push_back(BitVec row) {
    require_same_size(row.size(), cols_);
    rows_.push_back(std::move(row));
}

BitVec BitMat::combine(uint64_t coeffs) const {
    BitVec out(cols_);
    for (size_t i = 0; i < rows_.size() && i < 64; i++) {
        if ((coeffs >> i) & 1) {
            out ^= rows_[i];
        }
    }
    return out;
}

BitVec BitMat::combine(const BitVec &coeffs) const {
    require_same_size(coeffs.size(), rows_.size());
    BitVec out(cols_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (coeffs.get(i)) {
            out ^= rows_[i];
        }
    }
    return out;
}

uint64_t BitMat::products_mask(const BitVec &v) const {
    if (rows_.size() > 64) {
        throw std::invalid_argument("products_mask requires at most 64 rows");
    }
    uint64_t out = 0;
    for (size_t i = 0; i < rows_.size(); i++) {
        out |= uint64_t{rows_[i].dot(v)} << i;
    }
    return out;
}

BitMat BitMat::hstack(const BitMat &left, const BitMat &right) {
    if (left.num_rows() != right.num_rows()) {
        throw std::invalid_argument("hstack row count mismatch");
    }
    BitMat out(left.cols_ + right.cols_);
    for (size_t i = 0; i < left.num_rows(); i++) {
        out.push_back(left.rows_[i].concat(right.rows_[i]));
    }
    return out;
}

BitMat BitMat::vstack(const BitMat &below) const {
    require_same_size(cols_, below.cols_);
    BitMat out = *this;
    for (const auto &r : below.rows_) {
        out.rows_.push_back(r);
    }
    return out;
}

std::vector<std::string> BitMat::strs() const {
    std::vector<std::string> out;
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

}  // namespace diagclimb
