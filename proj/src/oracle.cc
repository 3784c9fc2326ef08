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

#include "diagclimb/oracle.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace diagclimb {

namespace {

struct BitVecHash {
    size_t operator()(const BitVec &v) const {
        uint64_t h = 1469598103934665603ull;
        for (auto w : v.words()) {
            h = (h ^ w) * 1099511628211ull;
        }
        return (size_t)h;
    }
};

using SparseState = std::unordered_map<BitVec, std::complex<double>, BitVecHash>;

SparseState float_state(const CssCode &code, uint64_t alpha) {
    SparseState out;
    for (const auto &[u, amp] : encode_basis_state(code, BitVec::from_mask(code.k(), alpha))) {
        out.emplace(u, amp.to_complex());
    }
    return out;
}

}  // namespace

std::complex<double> float_entry(const DiagonalGate &gate, const BitVec &u) {
    double theta = 0;
    if (gate.kind() == DiagonalGate::Kind::kQfd) {
        const auto &r = gate.qfd_matrix();
        double acc = 0;
        for (size_t i : u.support()) {
            for (size_t j : u.support()) {
                acc += (double)r[i][j];
            }
        }
        theta = std::numbers::pi * acc / std::ldexp(1.0, gate.level() - 1);
    } else {
        for (const auto &b : gate.blocks()) {
            size_t p = 0;
            for (size_t t = 0; t < b.qubits.size(); t++) {
                p |= size_t{u.get(b.qubits[t])} << t;
            }
            theta += std::numbers::pi * (double)b.diag.exps[p] / std::ldexp(1.0, b.diag.level - 1);
        }
    }
    return std::polar(1.0, theta);
}

LogicalBlock logical_block(const CssCode &code, const DiagonalGate &gate) {
    size_t k = code.k();
    size_t d2 = code.x_stab().num_rows();
    if (gate.n() != code.n()) {
        throw std::invalid_argument("logical_block: gate and code lengths differ");
    }
    if (2 * k + d2 > (size_t)kOracleCapLog2) {
        throw std::length_error("logical_block: code too large for the statevector oracle");
    }
    size_t count = size_t{1} << k;
    std::vector<SparseState> states;
    for (uint64_t a = 0; a < count; a++) {
        states.push_back(float_state(code, a));
    }
    // U |encode(alpha)>, then overlap with every encode(beta).
    LogicalBlock out;
    out.k = k;
    out.entries.assign(count * count, 0);
    for (uint64_t a = 0; a < count; a++) {
        std::vector<std::pair<BitVec, std::complex<double>>> image;
        for (const auto &[u, amp] : states[a]) {
            image.emplace_back(u, float_entry(gate, u) * amp);
        }
        for (uint64_t b = 0; b < count; b++) {
            std::complex<double> acc = 0;
            for (const auto &[u, amp] : image) {
                auto it = states[b].find(u);
                if (it != states[b].end()) {
                    acc += std::conj(it->second) * amp;
                }
            }
            out.entries[(b << k) | a] = acc;
        }
    }
    return out;
}

bool CrosscheckReport::ok() const {
    if (!verdicts_agree() || diagonal_deviation >= tol || row_deviation >= tol) {
        return false;
    }
    return !exact_preserved || offdiagonal_max < tol;
}

namespace {

std::string alpha_label(uint64_t a, size_t k) {
    return BitVec::from_mask(k, a).str();
}

CrosscheckReport compare(const CssCode &code, const LogicalBlock &m, const GenCoeffRow &row, bool preserved, double tol) {
    CrosscheckReport rep;
    rep.tol = tol;
    rep.exact_preserved = preserved;
    size_t k = m.k;
    size_t count = size_t{1} << k;
    if (row.values.size() != count) {
        throw std::invalid_argument("crosscheck: row does not cover every logical");
    }
    double worst = -1;
    auto note = [&](double dev, const std::string &where) {
        if (dev > worst) {
            worst = dev;
            rep.witness = where;
        }
    };
    // Unitarity of M.
    for (size_t i = 0; i < count; i++) {
        for (size_t j = 0; j < count; j++) {
            std::complex<double> acc = 0;
            for (size_t b = 0; b < count; b++) {
                acc += std::conj(m.at(b, i)) * m.at(b, j);
            }
            double dev = std::abs(acc - (i == j ? 1.0 : 0.0));
            rep.unitarity_deviation = std::max(rep.unitarity_deviation, dev);
        }
    }
    rep.oracle_unitary = rep.unitarity_deviation < tol;
    std::vector<std::complex<double>> a(count);
    for (size_t i = 0; i < count; i++) {
        a[i] = row.values[i].to_complex();
    }
    for (size_t beta = 0; beta < count; beta++) {
        std::complex<double> pred = 0;
        for (size_t alpha = 0; alpha < count; alpha++) {
            pred += (std::popcount(alpha & beta) & 1) ? -a[alpha] : a[alpha];
        }
        double dev = std::abs(pred - m.at(beta, beta));
        rep.diagonal_deviation = std::max(rep.diagonal_deviation, dev);
        note(dev, "diagonal entry beta=" + alpha_label(beta, k));
        for (size_t alpha = 0; alpha < count; alpha++) {
            if (alpha != beta) {
                rep.offdiagonal_max = std::max(rep.offdiagonal_max, std::abs(m.at(beta, alpha)));
            }
        }
    }
    for (size_t alpha = 0; alpha < count; alpha++) {
        std::complex<double> num = 0;
        for (size_t beta = 0; beta < count; beta++) {
            num += (std::popcount(alpha & beta) & 1) ? -m.at(beta, beta) : m.at(beta, beta);
        }
        num /= (double)count;
        double dev = std::abs(num - a[alpha]);
        rep.row_deviation = std::max(rep.row_deviation, dev);
        note(dev, "coefficient gamma=" + code.z_logical(alpha).str() + " (alpha=" + alpha_label(alpha, k) + ")");
    }
    return rep;
}

}  // namespace

CrosscheckReport crosscheck(const CssCode &code, const DiagonalGate &gate, double tol, EngineOptions opt) {
    LogicalBlock m = logical_block(code, gate);
    GenCoeffRow row = trivial_row(code, gate, opt);
    bool preserved = is_preserved(code, gate, opt).preserved;
    return compare(code, m, row, preserved, tol);
}

CrosscheckReport crosscheck(const CssCode &code, const DiagonalGate &gate, const GenCoeffRow &row, double tol) {
    LogicalBlock m = logical_block(code, gate);
    return compare(code, m, row, row_norm(row) == Cyclo::one(), tol);
}

}  // namespace diagclimb
