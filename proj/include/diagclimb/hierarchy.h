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

#ifndef DIAGCLIMB_HIERARCHY_H
#define DIAGCLIMB_HIERARCHY_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagclimb/bitvec.h"
#include "diagclimb/cyclo.h"

namespace diagclimb {

/// Exponent function in algebraic normal form over Z_{2^L}.
///
/// Monomials are variable masks (bit i <-> variable i, i.e. logical qubit i);
/// the empty mask is the constant term. Zero coefficients are never stored.
struct PhasePolynomial {
    size_t k = 0;
    int level = 1;
    std::map<uint64_t, int64_t> coeffs;

    int64_t eval(uint64_t beta) const;
    /// All 2^k exponents.
    std::vector<int64_t> exps() const;
    PhasePolynomial promote(int new_level) const;
    bool operator==(const PhasePolynomial &other) const = default;
};

/// Moebius transform of 2^k exponents at level L.
PhasePolynomial phase_polynomial(int level, const std::vector<int64_t> &exps);
/// Same for exact entries; throws std::invalid_argument on a non-root entry.
PhasePolynomial phase_polynomial(const std::vector<Cyclo> &entries);

/// max over non-constant monomials S of |S| + L - 1 - v2(c_S); 0 if constant.
int hierarchy_level(const PhasePolynomial &p);
/// Level from the commutator recursion on explicit exponents: 0 for a
/// constant diagonal, else 1 + max over a != 0 of the level of e(b) - e(b + a).
int commutator_level(int level, const std::vector<int64_t> &exps);

/// (C^(i)Z^(1/2^root))^power on `qubits`, i = |qubits| - 1; dagger negates.
struct GateTerm {
    std::vector<size_t> qubits;
    int root = 0;
    bool dagger = false;
    int64_t power = 1;
    bool operator==(const GateTerm &other) const = default;
};

struct GateTemplate {
    std::string name;
    size_t k = 0;
    std::vector<GateTerm> terms;

    /// Smallest level holding every term exactly.
    int level() const;
    PhasePolynomial polynomial(int level) const;
};

/// Parses the printer's grammar, for example "CCZ[0,1,2]" or "T†[0] · T†[1]".
/// Single-qubit names with several qubits mean one copy per qubit.
GateTemplate parse_template(std::string_view text, size_t k);
/// Name of C^(i)Z^(1/2^j), e.g. "CZ", "CCT", "C^(3)Z^{1/16}".
std::string elementary_name(int controls, int root);

struct MatchOptions {
    bool allow_pauli_z = true;
    bool allow_basis_change = false;
    /// Conjugation by logical Pauli X (beta -> beta + x_mask).
    bool allow_pauli_x = false;
};

/// input(beta) = global_phase + template(beta M + x) + 2^(L-1) (z . beta) mod 2^L,
/// with M the basis change (identity when absent) acting on row vectors.
struct GateMatch {
    bool matched = false;
    std::string template_name;
    int level = 1;
    /// Global phase is e^{iπ·global_phase/2^(phase_level-1)}.
    int64_t global_phase = 0;
    int phase_level = 1;
    BitVec pauli_z_mask;
    BitVec pauli_x_mask;
    /// Images of the unit vectors; empty when the stored frame matches as is.
    std::optional<std::vector<uint64_t>> basis_change;
};

/// Deterministic search: x = 0 before any Pauli-X conjugation, and within each
/// x, basis rows in increasing integer order, so the identity basis is tried first.
GateMatch match(int level, const std::vector<int64_t> &exps, const GateTemplate &tmpl, MatchOptions opt = {});

/// e^{iπ·a/2^(L-1)} in lowest terms; "1" when trivial.
std::string phase_string(int64_t a, int level);

/// "e^{iπ·a/2^(L-1)} · Π C^(i)Z^{1/2^j}[qubits] · Z[qubits]".
std::string describe(const PhasePolynomial &p);

}  // namespace diagclimb

#endif
