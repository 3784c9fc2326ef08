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

#ifndef DIAGCLIMB_BITVEC_H
#define DIAGCLIMB_BITVEC_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diagclimb {

/// Fixed-length binary vector packed into 64-bit words.
///
/// Qubit (coordinate) 0 is the leftmost character of the string form and is
/// stored in bit 0 of word 0. Bits beyond `size()` in the last word are always
/// zero, so word-wise popcount and comparison are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n);

    /// Parses an ASCII '0'/'1' string. Throws std::invalid_argument otherwise.
    static BitVec from_str(std::string_view bits);
    static BitVec ones(size_t n);
    static BitVec unit(size_t n, size_t index);
    /// Low `n` bits of `mask`, bit i -> coordinate i. Requires n <= 64.
    static BitVec from_mask(size_t n, uint64_t mask);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }

    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](size_t i) const {
        return get(i);
    }
    void set(size_t i, bool value);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        a &= b;
        return a;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        a |= b;
        return a;
    }

    size_t weight() const;
    bool is_zero() const;
    /// Inner product mod 2. Throws on length mismatch.
    bool dot(const BitVec &other) const;
    /// Index of the lowest set coordinate, or -1 when zero.
    long first_one() const;
    /// Low 64 coordinates as an integer mask (coordinate i -> bit i).
    uint64_t low_mask() const {
        return words_.empty() ? 0 : words_[0];
    }

    /// [this, other].
    BitVec concat(const BitVec &other) const;
    /// Coordinates [begin, begin + len).
    BitVec slice(size_t begin, size_t len) const;
    std::vector<size_t> support() const;

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    /// Orders by length, then lexicographically by string form.
    std::strong_ordering operator<=>(const BitVec &other) const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Ordered list of equal-length rows.
class BitMat {
   public:
    BitMat() = default;
    explicit BitMat(size_t cols) : cols_(cols) {
    }
    BitMat(size_t cols, std::vector<BitVec> rows);

    static BitMat from_strs(const std::vector<std::string> &rows, size_t cols = 0);
    static BitMat identity(size_t n);

    size_t cols() const {
        return cols_;
    }
    size_t num_rows() const {
        return rows_.size();
    }
    bool empty() const {
        return rows_.empty();
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    const BitVec &operator[](size_t i) const {
        return rows_[i];
    }
    void push_back(BitVec row);

    /// Sum of rows selected by the bits of `coeffs` (row i <-> bit i).
    BitVec combine(uint64_t coeffs) const;
    BitVec combine(const BitVec &coeffs) const;
    /// Bits (row_i . v) packed as an integer. Requires num_rows() <= 64.
    uint64_t products_mask(const BitVec &v) const;

    /// Rows [a, b] for each row pair; both matrices need the same row count.
    static BitMat hstack(const BitMat &left, const BitMat &right);
    BitMat vstack(const BitMat &below) const;

    std::vector<std::string> strs() const;

    bool operator==(const BitMat &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

}  // namespace diagclimb

#endif
