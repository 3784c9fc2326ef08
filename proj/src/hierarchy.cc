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

#include "diagclimb/hierarchy.h"

#include <bit>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace diagclimb {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// In-place Moebius transform mod 2^L: a[S] <- sum_{T subset S} (-1)^{|S|-|T|} a[T].
void moebius(std::vector<int64_t> &a, int64_t modulus) {
    for (size_t h = 1; h < a.size(); h <<= 1) {
        for (size_t i = 0; i < a.size(); i++) {
            if (i & h) {
                a[i] = mod_pos(a[i] - a[i ^ h], modulus);
            }
        }
    }
}

void check_exps_size(const std::vector<int64_t> &exps) {
    if (exps.empty() || !std::has_single_bit(exps.size())) {
        throw std::invalid_argument("diagonal length must be a power of two");
    }
}

}  // namespace

int64_t PhasePolynomial::eval(uint64_t beta) const {
    int64_t m = int64_t{1} << level;
    int64_t acc = 0;
    for (auto [mono, c] : coeffs) {
        if ((beta & mono) == mono) {
            acc += c;
        }
    }
    return mod_pos(acc, m);
}

std::vector<int64_t> PhasePolynomial::exps() const {
    std::vector<int64_t> out(size_t{1} << k);
    for (size_t b = 0; b < out.size(); b++) {
        out[b] = eval(b);
    }
    return out;
}

PhasePolynomial PhasePolynomial::promote(int new_level) const {
    if (new_level < level) {
        throw std::invalid_argument("phase polynomial promote to a lower level");
    }
    PhasePolynomial out{k, new_level, {}};
    for (auto [mono, c] : coeffs) {
        out.coeffs[mono] = c << (new_level - level);
    }
    return out;
}

PhasePolynomial phase_polynomial(int level, const std::vector<int64_t> &exps) {
    check_exps_size(exps);
    if (level < 1 || level > 62) {
        throw std::out_of_range("phase polynomial level out of range");
    }
    int64_t m = int64_t{1} << level;
    std::vector<int64_t> a(exps.size());
    for (size_t i = 0; i < a.size(); i++) {
        a[i] = mod_pos(exps[i], m);
    }
    moebius(a, m);
    PhasePolynomial p;
    p.k = (size_t)std::countr_zero(exps.size());
    p.level = level;
    for (size_t s = 0; s < a.size(); s++) {
        if (a[s] != 0) {
            p.coeffs[s] = a[s];
        }
    }
    return p;
}

PhasePolynomial phase_polynomial(const std::vector<Cyclo> &entries) {
    int level = 1;
    for (const auto &e : entries) {
        level = std::max(level, e.level());
    }
    std::vector<int64_t> exps;
    for (size_t i = 0; i < entries.size(); i++) {
        auto r = entries[i].promote(level).as_root_of_unity();
        if (!r.has_value()) {
            throw std::invalid_argument("diagonal entry " + std::to_string(i) + " is not a root of unity");
        }
        exps.push_back(*r);
    }
    return phase_polynomial(level, exps);
}

int hierarchy_level(const PhasePolynomial &p) {
    int best = 0;
    for (auto [mono, c] : p.coeffs) {
        if (mono == 0 || c == 0) {
            continue;
        }
        int deg = std::popcount(mono);
        int v = std::countr_zero((uint64_t)c);
        best = std::max(best, deg + p.level - 1 - v);
    }
    return best;
}

int commutator_level(int level, const std::vector<int64_t> &exps) {
    check_exps_size(exps);
    int64_t m = int64_t{1} << level;
    std::map<std::vector<int64_t>, int> memo;
    std::function<int(const std::vector<int64_t> &)> rec = [&](const std::vector<int64_t> &e) -> int {
        std::vector<int64_t> norm(e.size());
        for (size_t i = 0; i < e.size(); i++) {
            norm[i] = mod_pos(e[i] - e[0], m);
        }
        bool constant = true;
        for (auto x : norm) {
            constant &= x == 0;
        }
        if (constant) {
            return 0;
        }
        if (auto it = memo.find(norm); it != memo.end()) {
            return it->second;
        }
        int best = 0;
        std::vector<int64_t> w(norm.size());
        for (size_t a = 1; a < norm.size(); a++) {
            for (size_t b = 0; b < norm.size(); b++) {
                w[b] = norm[b] - norm[b ^ a];
            }
            best = std::max(best, rec(w));
        }
        memo[norm] = best + 1;
        return best + 1;
    };
    return rec(exps);
}

int GateTemplate::level() const {
    int l = 1;
    for (const auto &t : terms) {
        l = std::max(l, t.root + 1);
    }
    return l;
}

PhasePolynomial GateTemplate::polynomial(int lvl) const {
    int64_t m = int64_t{1} << lvl;
    PhasePolynomial p{k, lvl, {}};
    for (const auto &t : terms) {
        if (t.root + 1 > lvl) {
            throw std::invalid_argument("template term needs a higher level");
        }
        uint64_t mono = 0;
        for (auto q : t.qubits) {
            if (q >= k) {
                throw std::out_of_range("template qubit index out of range");
            }
            mono |= uint64_t{1} << q;
        }
        int64_t c = (t.dagger ? -t.power : t.power) * (int64_t{1} << (lvl - 1 - t.root));
        int64_t &slot = p.coeffs[mono];
        slot = mod_pos(slot + c, m);
        if (slot == 0) {
            p.coeffs.erase(mono);
        }
    }
    return p;
}

std::string elementary_name(int controls, int root) {
    std::string prefix;
    if (controls == 1) {
        prefix = "C";
    } else if (controls == 2) {
        prefix = "CC";
    } else if (controls > 2) {
        prefix = "C^(" + std::to_string(controls) + ")";
    }
    std::string base;
    switch (root) {
        case 0:
            base = "Z";
            break;
        case 1:
            base = "P";
            break;
        case 2:
            base = "T";
            break;
        default:
            base = "Z^{1/" + std::to_string(int64_t{1} << root) + "}";
    }
    return prefix + base;
}

namespace {

const std::string kDagger = "†";

struct TemplateParser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &why) const {
        throw std::invalid_argument("bad gate template \"" + std::string(s) + "\" at " + std::to_string(pos) + ": " + why);
    }
    bool starts(std::string_view tok) const {
        return s.substr(pos, tok.size()) == tok;
    }
    bool eat(std::string_view tok) {
        if (starts(tok)) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    int64_t number() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            pos++;
        }
        if (start == pos) {
            fail("expected a number");
        }
        return std::stoll(std::string(s.substr(start, pos - start)));
    }
    void skip_separators() {
        while (pos < s.size()) {
            if (std::isspace((unsigned char)s[pos]) || s[pos] == '*') {
                pos++;
            } else if (!eat("·") && !eat("⊗")) {
                return;
            }
        }
    }
    void skip_phase() {
        // e^{...}
        if (!eat("e^{")) {
            return;
        }
        while (pos < s.size() && s[pos] != '}') {
            pos++;
        }
        if (!eat("}")) {
            fail("unterminated phase");
        }
    }
    int root_of_denominator(int64_t d) {
        if (d < 1 || !std::has_single_bit((uint64_t)d)) {
            fail("root denominator must be a power of two");
        }
        return std::countr_zero((uint64_t)d);
    }
};

}  // namespace

GateTemplate parse_template(std::string_view text, size_t k) {
    TemplateParser p{text};
    GateTemplate out;
    out.name = std::string(text);
    out.k = k;
    while (true) {
        p.skip_separators();
        if (p.pos >= text.size()) {
            break;
        }
        if (p.starts("e^{")) {
            p.skip_phase();
            continue;
        }
        bool paren = p.eat("(");
        int controls = 0;
        if (p.eat("C^(")) {
            controls = (int)p.number();
            if (!p.eat(")")) {
                p.fail("expected ')'");
            }
        } else {
            while (p.starts("C")) {
                p.pos++;
                controls++;
            }
        }
        int root;
        if (p.eat("Z^{1/")) {
            int64_t d = p.number();
            if (p.eat("^")) {
                d = int64_t{1} << d;
            }
            root = p.root_of_denominator(d);
            if (!p.eat("}")) {
                p.fail("expected '}'");
            }
        } else if (p.eat("Z")) {
            root = 0;
        } else if (p.eat("P") || p.eat("S")) {
            root = 1;
        } else if (p.eat("T")) {
            root = 2;
        } else {
            p.fail("unknown gate name");
        }
        bool dagger = p.eat(kDagger) || p.eat("^dag") || p.eat("'");
        if (paren && !p.eat(")")) {
            p.fail("expected ')'");
        }
        int64_t power = 1;
        if (p.starts("^") && p.pos + 1 < text.size() && std::isdigit((unsigned char)text[p.pos + 1])) {
            p.pos++;
            power = p.number();
        }
        if (!p.eat("[")) {
            p.fail("expected '['");
        }
        std::vector<size_t> qubits;
        if (!p.eat("]")) {
            while (true) {
                qubits.push_back((size_t)p.number());
                if (p.eat(",")) {
                    continue;
                }
                if (!p.eat("]")) {
                    p.fail("expected ']'");
                }
                break;
            }
        }
        if (controls == 0) {
            for (auto q : qubits) {
                out.terms.push_back({{q}, root, dagger, power});
            }
        } else {
            if ((int)qubits.size() != controls + 1) {
                p.fail("controlled gate needs controls + 1 qubits");
            }
            out.terms.push_back({qubits, root, dagger, power});
        }
    }
    for (const auto &t : out.terms) {
        for (auto q : t.qubits) {
            if (q >= k) {
                throw std::invalid_argument("gate template qubit " + std::to_string(q) + " out of range");
            }
        }
    }
    return out;
}

namespace {

// True when the ANF of d (2^j entries) is a constant plus allowed linear terms.
bool affine_ok(std::vector<int64_t> d, int64_t modulus, bool allow_z) {
    moebius(d, modulus);
    for (size_t s = 1; s < d.size(); s++) {
        if (d[s] == 0) {
            continue;
        }
        if (std::popcount(s) >= 2) {
            return false;
        }
        if (!allow_z || d[s] != modulus / 2) {
            return false;
        }
    }
    return true;
}

}  // namespace

GateMatch match(int level, const std::vector<int64_t> &exps, const GateTemplate &tmpl, MatchOptions opt) {
    check_exps_size(exps);
    size_t k = (size_t)std::countr_zero(exps.size());
    if (tmpl.k != k) {
        throw std::invalid_argument("template qubit count differs from the diagonal");
    }
    if (opt.allow_basis_change && k > 6) {
        throw std::invalid_argument("basis-change search supports k <= 6");
    }
    int lvl = std::max(level, tmpl.level());
    int64_t m = int64_t{1} << lvl;
    std::vector<int64_t> in(exps.size());
    for (size_t b = 0; b < in.size(); b++) {
        in[b] = mod_pos(exps[b] << (lvl - level), m);
    }
    std::vector<int64_t> t = tmpl.polynomial(lvl).exps();
    size_t size = exps.size();

    GateMatch out;
    out.template_name = tmpl.name;
    out.level = hierarchy_level(phase_polynomial(lvl, in));
    out.phase_level = lvl;
    out.pauli_z_mask = BitVec(k);
    out.pauli_x_mask = BitVec(k);

    std::vector<uint64_t> rows(k);
    // image[b] = b M for b inside the current subcube.
    std::vector<uint64_t> image(size, 0);
    std::vector<char> in_span(size, 0);
    uint64_t x = 0;

    std::function<bool(size_t)> extend = [&](size_t j) -> bool {
        if (j == k) {
            return true;
        }
        uint64_t lo = uint64_t{1} << j;
        auto try_row = [&](uint64_t r) -> bool {
            for (uint64_t b = 0; b < lo; b++) {
                image[lo | b] = image[b] ^ r;
            }
            std::vector<int64_t> d(2 * lo);
            for (uint64_t b = 0; b < 2 * lo; b++) {
                d[b] = in[b] - t[image[b] ^ x];
            }
            if (!affine_ok(std::move(d), m, opt.allow_pauli_z)) {
                return false;
            }
            rows[j] = r;
            std::vector<uint64_t> added;
            for (uint64_t b = 0; b < lo; b++) {
                if (!in_span[image[lo | b]]) {
                    in_span[image[lo | b]] = 1;
                    added.push_back(image[lo | b]);
                }
            }
            if (extend(j + 1)) {
                return true;
            }
            for (auto a : added) {
                in_span[a] = 0;
            }
            return false;
        };
        if (!opt.allow_basis_change) {
            return try_row(lo);
        }
        for (uint64_t r = 1; r < size; r++) {
            if (!in_span[r] && try_row(r)) {
                return true;
            }
        }
        return false;
    };

    uint64_t x_count = opt.allow_pauli_x ? size : 1;
    for (x = 0; x < x_count; x++) {
        std::fill(in_span.begin(), in_span.end(), 0);
        in_span[0] = 1;
        image[0] = 0;
        if (!extend(0)) {
            continue;
        }
        std::vector<int64_t> d(size);
        for (uint64_t b = 0; b < size; b++) {
            d[b] = mod_pos(in[b] - t[image[b] ^ x], m);
        }
        out.global_phase = d[0];
        std::vector<int64_t> anf = d;
        moebius(anf, m);
        for (size_t i = 0; i < k; i++) {
            if (anf[size_t{1} << i]) {
                out.pauli_z_mask.set(i, true);
            }
        }
        out.pauli_x_mask = BitVec::from_mask(k, x);
        bool identity = true;
        for (size_t i = 0; i < k; i++) {
            identity &= rows[i] == (uint64_t{1} << i);
        }
        if (!identity) {
            out.basis_change = rows;
        }
        // Self-check of the reported transformation.
        for (uint64_t b = 0; b < size; b++) {
            uint64_t bm = 0;
            for (size_t i = 0; i < k; i++) {
                if ((b >> i) & 1) {
                    bm ^= rows[i];
                }
            }
            int64_t z = (int64_t)(std::popcount(b & out.pauli_z_mask.low_mask()) & 1) * (m / 2);
            if (mod_pos(out.global_phase + t[bm ^ x] + z - in[b], m) != 0) {
                throw std::logic_error("match: reported transformation does not reproduce the diagonal");
            }
        }
        out.matched = true;
        return out;
    }
    return out;
}

std::string phase_string(int64_t a, int level) {
    int64_t m = int64_t{1} << level;
    a = mod_pos(a, m);
    if (a == 0) {
        return "1";
    }
    int64_t den = m / 2;
    int v = std::min(std::countr_zero((uint64_t)a), std::countr_zero((uint64_t)den));
    a >>= v;
    den >>= v;
    if (den == 1) {
        return "e^{iπ}";
    }
    return "e^{iπ·" + std::to_string(a) + "/" + std::to_string(den) + "}";
}

std::string describe(const PhasePolynomial &p) {
    std::ostringstream out;
    int64_t c0 = 0;
    if (auto it = p.coeffs.find(0); it != p.coeffs.end()) {
        c0 = it->second;
    }
    std::vector<std::string> parts;
    if (c0 != 0) {
        parts.push_back(phase_string(c0, p.level));
    }
    std::vector<size_t> paulis;
    for (auto [mono, c] : p.coeffs) {
        if (mono == 0) {
            continue;
        }
        std::vector<size_t> qubits;
        for (size_t i = 0; i < p.k; i++) {
            if ((mono >> i) & 1) {
                qubits.push_back(i);
            }
        }
        int v = std::countr_zero((uint64_t)c);
        int root = p.level - 1 - v;
        int64_t u = c >> v;
        int64_t order = int64_t{1} << (root + 1);
        bool dagger = false;
        if (u > order / 2) {
            u = order - u;
            dagger = true;
        }
        if (qubits.size() == 1 && root == 0) {
            paulis.push_back(qubits[0]);
            continue;
        }
        std::string term = elementary_name((int)qubits.size() - 1, root);
        if (dagger) {
            term += "†";
        }
        if (u != 1) {
            term += "^" + std::to_string(u);
        }
        term += "[";
        for (size_t i = 0; i < qubits.size(); i++) {
            term += (i ? "," : "") + std::to_string(qubits[i]);
        }
        term += "]";
        parts.push_back(term);
    }
    if (!paulis.empty()) {
        std::string z = "Z[";
        for (size_t i = 0; i < paulis.size(); i++) {
            z += (i ? "," : "") + std::to_string(paulis[i]);
        }
        parts.push_back(z + "]");
    }
    if (parts.empty()) {
        return "I";
    }
    for (size_t i = 0; i < parts.size(); i++) {
        out << (i ? " · " : "") << parts[i];
    }
    return out.str();
}

}  // namespace diagclimb
