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

#include "diagclimb/cyclo.h"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace diagclimb {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void Cyclo::check_level(int level) {
    if (level < 1 || level > kMaxLevel) {
        throw std::out_of_range("cyclotomic level " + std::to_string(level) + " outside [1, 8]");
    }
}

Cyclo::Cyclo() : coeffs_(1) {
}

Cyclo::Cyclo(int level, std::vector<BigInt> coeffs, int denom_exp)
    : level_(level), denom_exp_(denom_exp), coeffs_(std::move(coeffs)) {
    check_level(level);
    if (coeffs_.size() != (size_t{1} << (level - 1))) {
        throw std::invalid_argument("cyclotomic coefficient count must be 2^(L-1)");
    }
    if (denom_exp < 0) {
        throw std::invalid_argument("negative denominator exponent");
    }
    canonicalize();
}

Cyclo Cyclo::zero(int level) {
    check_level(level);
    return Cyclo(level, std::vector<BigInt>(size_t{1} << (level - 1)));
}

Cyclo Cyclo::one(int level) {
    return root(level, 0);
}

Cyclo Cyclo::integer(const BigInt &v, int level) {
    return dyadic(v, 0, level);
}

Cyclo Cyclo::dyadic(const BigInt &num, int denom_exp, int level) {
    check_level(level);
    std::vector<BigInt> c(size_t{1} << (level - 1));
    c[0] = num;
    return Cyclo(level, std::move(c), denom_exp);
}

Cyclo Cyclo::root(int level, int64_t k) {
    check_level(level);
    int64_t half = int64_t{1} << (level - 1);
    k = mod_pos(k, 2 * half);
    std::vector<BigInt> c(half);
    if (k < half) {
        c[k] = 1;
    } else {
        c[k - half] = -1;
    }
    return Cyclo(level, std::move(c));
}

Cyclo Cyclo::cos_pi_over(int l) {
    return (root(l + 1, 1) + root(l + 1, -1)).scaled_pow2(1);
}

Cyclo Cyclo::neg_i_sin_pi_over(int l) {
    return (root(l + 1, -1) - root(l + 1, 1)).scaled_pow2(1);
}

Cyclo Cyclo::i_sin_pi_over(int l) {
    return -neg_i_sin_pi_over(l);
}

Cyclo Cyclo::sqrt2() {
    return root(3, 1) - root(3, 3);
}

void Cyclo::canonicalize() {
    bool all_zero = true;
    for (const auto &c : coeffs_) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        denom_exp_ = 0;
        return;
    }
    while (denom_exp_ > 0) {
        for (const auto &c : coeffs_) {
            if (boost::multiprecision::bit_test(c, 0)) {
                return;
            }
        }
        for (auto &c : coeffs_) {
            c >>= 1;
        }
        denom_exp_--;
    }
}

bool Cyclo::is_zero() const {
    for (const auto &c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool Cyclo::is_real() const {
    return *this == conj();
}

Cyclo Cyclo::promote(int new_level) const {
    check_level(new_level);
    if (new_level < level_) {
        throw std::invalid_argument("promote to a lower level");
    }
    if (new_level == level_) {
        return *this;
    }
    size_t stride = size_t{1} << (new_level - level_);
    Cyclo out;
    out.level_ = new_level;
    out.denom_exp_ = denom_exp_;
    out.coeffs_.assign(size_t{1} << (new_level - 1), BigInt(0));
    for (size_t j = 0; j < coeffs_.size(); j++) {
        out.coeffs_[j * stride] = coeffs_[j];
    }
    return out;
}

Cyclo Cyclo::demote() const {
    Cyclo cur = *this;
    while (cur.level_ > 1) {
        bool ok = true;
        for (size_t j = 1; j < cur.coeffs_.size(); j += 2) {
            if (cur.coeffs_[j] != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            break;
        }
        std::vector<BigInt> c(cur.coeffs_.size() / 2);
        for (size_t j = 0; j < c.size(); j++) {
            c[j] = cur.coeffs_[2 * j];
        }
        cur = Cyclo(cur.level_ - 1, std::move(c), cur.denom_exp_);
    }
    return cur;
}

Cyclo Cyclo::conj() const {
    // zeta^-j = -zeta^(W - j) for 0 < j < W.
    size_t w = coeffs_.size();
    Cyclo out = *this;
    for (size_t j = 1; j < w; j++) {
        out.coeffs_[w - j] = -coeffs_[j];
    }
    return out;
}

Cyclo Cyclo::abs_sq() const {
    return *this * conj();
}

Cyclo Cyclo::scaled_pow2(int k) const {
    Cyclo out = *this;
    if (k >= 0) {
        out.denom_exp_ += k;
    } else {
        int up = -k;
        int take = std::min(up, out.denom_exp_);
        out.denom_exp_ -= take;
        up -= take;
        if (up > 0) {
            for (auto &c : out.coeffs_) {
                c <<= up;
            }
        }
    }
    out.canonicalize();
    return out;
}

std::optional<int64_t> Cyclo::as_root_of_unity() const {
    if (denom_exp_ != 0) {
        return std::nullopt;
    }
    std::optional<int64_t> found;
    int64_t w = (int64_t)coeffs_.size();
    for (int64_t j = 0; j < w; j++) {
        const BigInt &c = coeffs_[j];
        if (c == 0) {
            continue;
        }
        if (found.has_value()) {
            return std::nullopt;
        }
        if (c == 1) {
            found = j;
        } else if (c == -1) {
            found = j + w;
        } else {
            return std::nullopt;
        }
    }
    return found;
}

std::complex<double> Cyclo::to_complex() const {
    double w = (double)coeffs_.size();
    std::complex<double> acc = 0;
    for (size_t j = 0; j < coeffs_.size(); j++) {
        if (coeffs_[j] == 0) {
            continue;
        }
        double theta = std::numbers::pi * (double)j / w;
        acc += coeffs_[j].convert_to<double>() * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc * std::ldexp(1.0, -denom_exp_);
}

std::string Cyclo::str() const {
    std::ostringstream out;
    out << "2^-" << denom_exp_ << " * [";
    for (size_t j = 0; j < coeffs_.size(); j++) {
        if (j) {
            out << ",";
        }
        out << coeffs_[j];
    }
    out << "] @ " << level_;
    return out.str();
}

Cyclo Cyclo::parse(std::string_view text) {
    size_t pos = 0;
    auto fail = [&](const std::string &why) -> Cyclo {
        throw std::invalid_argument("bad cyclotomic literal \"" + std::string(text) + "\": " + why);
    };
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) {
            pos++;
        }
    };
    auto expect = [&](std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) != tok) {
            fail("expected '" + std::string(tok) + "'");
        }
        pos += tok.size();
    };
    auto read_int = [&]() -> std::string {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            pos++;
        }
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            pos++;
        }
        if (pos == start || !std::isdigit((unsigned char)text[pos - 1])) {
            fail("expected integer");
        }
        return std::string(text.substr(start, pos - start));
    };
    expect("2^-");
    int e = std::stoi(read_int());
    expect("*");
    expect("[");
    std::vector<BigInt> coeffs;
    skip_ws();
    if (pos < text.size() && text[pos] != ']') {
        while (true) {
            coeffs.emplace_back(read_int());
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                pos++;
                continue;
            }
            break;
        }
    }
    expect("]");
    expect("@");
    int level = std::stoi(read_int());
    skip_ws();
    if (pos != text.size()) {
        fail("trailing characters");
    }
    if (level < 1 || level > kMaxLevel) {
        fail("level out of range");
    }
    if (coeffs.size() != (size_t{1} << (level - 1))) {
        fail("coefficient count must be 2^(L-1)");
    }
    if (e < 0) {
        fail("negative exponent");
    }
    return Cyclo(level, std::move(coeffs), e);
}

Cyclo Cyclo::operator-() const {
    Cyclo out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Cyclo &Cyclo::operator+=(const Cyclo &other) {
    int level = std::max(level_, other.level_);
    if (level_ < level) {
        *this = promote(level);
    }
    const Cyclo &b = other.level_ < level ? other.promote(level) : other;
    int e = std::max(denom_exp_, b.denom_exp_);
    int sa = e - denom_exp_;
    int sb = e - b.denom_exp_;
    for (size_t j = 0; j < coeffs_.size(); j++) {
        if (sa) {
            coeffs_[j] <<= sa;
        }
        if (sb) {
            coeffs_[j] += b.coeffs_[j] << sb;
        } else {
            coeffs_[j] += b.coeffs_[j];
        }
    }
    denom_exp_ = e;
    canonicalize();
    return *this;
}

Cyclo &Cyclo::operator-=(const Cyclo &other) {
    return *this += -other;
}

Cyclo &Cyclo::operator*=(const Cyclo &other) {
    int level = std::max(level_, other.level_);
    Cyclo a = level_ < level ? promote(level) : *this;
    const Cyclo b = other.level_ < level ? other.promote(level) : other;
    size_t w = a.coeffs_.size();
    std::vector<BigInt> out(w);
    for (size_t i = 0; i < w; i++) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < w; j++) {
            if (b.coeffs_[j] == 0) {
                continue;
            }
            size_t s = i + j;
            if (s < w) {
                out[s] += a.coeffs_[i] * b.coeffs_[j];
            } else {
                out[s - w] -= a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    level_ = level;
    coeffs_ = std::move(out);
    denom_exp_ = a.denom_exp_ + b.denom_exp_;
    canonicalize();
    return *this;
}

bool Cyclo::operator==(const Cyclo &other) const {
    int level = std::max(level_, other.level_);
    if (level_ != level) {
        return promote(level) == other;
    }
    if (other.level_ != level) {
        return *this == other.promote(level);
    }
    return denom_exp_ == other.denom_exp_ && coeffs_ == other.coeffs_;
}

std::optional<int64_t> root_ratio(const Cyclo &a, const Cyclo &b) {
    int level = std::max(a.level(), b.level());
    int64_t order = int64_t{1} << level;
    Cyclo pa = a.promote(level);
    Cyclo pb = b.promote(level);
    if (pa.is_zero() || pb.is_zero()) {
        if (pa.is_zero() && pb.is_zero()) {
            return 0;
        }
        return std::nullopt;
    }
    for (int64_t k = 0; k < order; k++) {
        if (pa == Cyclo::root(level, k) * pb) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace diagclimb
