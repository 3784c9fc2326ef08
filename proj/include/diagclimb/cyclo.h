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

#ifndef DIAGCLIMB_CYCLO_H
#define DIAGCLIMB_CYCLO_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace diagclimb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of Z[zeta][1/2] where zeta = exp(i pi / 2^(L-1)).
///
/// Value is 2^-e * sum_j c_j zeta^j for j in [0, 2^(L-1)); zeta^(2^(L-1)) = -1.
/// Canonical: e is minimal, so some c_j is odd unless e == 0. The level is
/// never lowered implicitly; equality compares values across levels.
class Cyclo {
   public:
    static constexpr int kMaxLevel = 8;

    /// Zero at level 1.
    Cyclo();
    Cyclo(int level, std::vector<BigInt> coeffs, int denom_exp = 0);

    static Cyclo zero(int level = 1);
    static Cyclo one(int level = 1);
    static Cyclo integer(const BigInt &v, int level = 1);
    /// num / 2^denom_exp.
    static Cyclo dyadic(const BigInt &num, int denom_exp, int level = 1);
    /// zeta_{2^level}^k for any integer k.
    static Cyclo root(int level, int64_t k);

    /// cos(pi / 2^l), at level l + 1.
    static Cyclo cos_pi_over(int l);
    /// -i sin(pi / 2^l), at level l + 1.
    static Cyclo neg_i_sin_pi_over(int l);
    /// i sin(pi / 2^l), at level l + 1.
    static Cyclo i_sin_pi_over(int l);
    /// sqrt(2), at level 3.
    static Cyclo sqrt2();

    int level() const {
        return level_;
    }
    int denom_exp() const {
        return denom_exp_;
    }
    const std::vector<BigInt> &coeffs() const {
        return coeffs_;
    }

    bool is_zero() const;
    bool is_real() const;
    Cyclo promote(int new_level) const;
    /// Smallest level holding the value exactly.
    Cyclo demote() const;

    Cyclo conj() const;
    Cyclo abs_sq() const;
    /// Multiplies by 2^-k (k may be negative).
    Cyclo scaled_pow2(int k) const;
    /// k with *this == zeta_{2^level()}^k, reduced mod 2^level(); absent otherwise.
    std::optional<int64_t> as_root_of_unity() const;

    std::complex<double> to_complex() const;
    /// Serialized as "2^-e * [c0,...] @ L".
    std::string str() const;
    static Cyclo parse(std::string_view text);

    Cyclo operator-() const;
    Cyclo &operator+=(const Cyclo &other);
    Cyclo &operator-=(const Cyclo &other);
    Cyclo &operator*=(const Cyclo &other);
    friend Cyclo operator+(Cyclo a, const Cyclo &b) {
        a += b;
        return a;
    }
    friend Cyclo operator-(Cyclo a, const Cyclo &b) {
        a -= b;
        return a;
    }
    friend Cyclo operator*(Cyclo a, const Cyclo &b) {
        a *= b;
        return a;
    }
    bool operator==(const Cyclo &other) const;
    bool operator!=(const Cyclo &other) const {
        return !(*this == other);
    }

   private:
    void canonicalize();
    static void check_level(int level);

    int level_ = 1;
    int denom_exp_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Finds k with a == zeta_{2^L}^k * b at the common level L; absent if none.
std::optional<int64_t> root_ratio(const Cyclo &a, const Cyclo &b);

}  // namespace diagclimb

#endif
