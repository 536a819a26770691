/*
   Copyright 2026 The coinv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef COINV_MONOMIAL_HPP
#define COINV_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinv {

/// Exponent vector over a fixed number of variables.
struct Monomial {
    std::vector<int32_t> exps;

    Monomial() = default;
    explicit Monomial(size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> e) : exps(std::move(e)) {
        for (int32_t x : exps)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    static Monomial one(size_t nvars) { return Monomial(nvars); }
    static Monomial variable(size_t nvars, size_t i, int32_t e = 1) {
        Monomial m(nvars);
        m.exps.at(i) = e;
        return m;
    }

    size_t nvars() const { return exps.size(); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int32_t e) { return e == 0; });
    }
    /// True when this is x_i^k for a single variable i (k >= 1).
    bool is_pure_power(size_t* whichVar = nullptr) const {
        int found = -1;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) {
                if (found >= 0) return false;
                found = static_cast<int>(i);
            }
        }
        if (found < 0) return false;
        if (whichVar) *whichVar = static_cast<size_t>(found);
        return true;
    }

    bool divides(const Monomial& o) const {
        if (exps.size() != o.exps.size()) return false;
        for (size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > o.exps[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        Monomial r(a.exps.size());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
        return r;
    }
    /// Exact quotient; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        Monomial r(a.exps.size());
        for (size_t i = 0; i < a.exps.size(); ++i) {
            r.exps[i] = a.exps[i] - b.exps[i];
            if (r.exps[i] < 0) throw std::invalid_argument("Monomial: quotient not divisible");
        }
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        Monomial r(a.exps.size());
        for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        check_same(a, b);
        for (size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial&) const = default;

   private:
    static void check_same(const Monomial& a, const Monomial& b) {
        if (a.exps.size() != b.exps.size())
            throw std::invalid_argument("Monomial: variable count mismatch");
    }
};

/// A monomial order: lex or grevlex, with an optional priority permutation of
/// the variables (priority[0] is the highest variable; empty means identity,
/// i.e. x1 > x2 > ... > xn).
struct MonomialOrder {
    enum class Kind { lex, grevlex };
    Kind kind = Kind::lex;
    std::vector<int> priority;  // empty = identity

    static MonomialOrder lex() { return MonomialOrder{Kind::lex, {}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Kind::grevlex, {}}; }
    static MonomialOrder lex_with(std::vector<int> prio) {
        return MonomialOrder{Kind::lex, std::move(prio)};
    }
    static MonomialOrder grevlex_with(std::vector<int> prio) {
        return MonomialOrder{Kind::grevlex, std::move(prio)};
    }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("MonomialOrder: comparing different rings");
        if (!priority.empty() && priority.size() != a.nvars())
            throw std::invalid_argument("MonomialOrder: priority size mismatch");
        const size_t n = a.nvars();
        auto var = [&](size_t pos) { return priority.empty() ? pos : static_cast<size_t>(priority[pos]); };
        if (kind == Kind::lex) {
            for (size_t pos = 0; pos < n; ++pos) {
                int32_t ea = a.exps[var(pos)], eb = b.exps[var(pos)];
                if (ea != eb) return ea > eb ? 1 : -1;
            }
            return 0;
        }
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db ? 1 : -1;
        // grevlex tie break: scan from the lowest-priority variable; at the
        // first difference the smaller exponent wins.
        for (size_t pos = n; pos-- > 0;) {
            int32_t ea = a.exps[var(pos)], eb = b.exps[var(pos)];
            if (ea != eb) return ea < eb ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;
};

/// The canonical term order used by every polynomial's term map: lex with the
/// identity priority, iterated descending. Keeping one fixed canonical order
/// makes printed output and golden files deterministic regardless of the order
/// a computation runs under.
inline int canonical_compare(const Monomial& a, const Monomial& b) {
    const size_t n = a.exps.size();
    for (size_t i = 0; i < n; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
    }
    return 0;
}

struct CanonicalTermDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) > 0;
    }
};

/// Ascending canonical order, for ordered sets of monomials.
struct CanonicalTermAsc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_compare(a, b) < 0;
    }
};

/// All monomials of the given total degree, in canonical descending order.
inline std::vector<Monomial> monomials_of_degree(size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(size_t{0}));
        return out;
    }
    Monomial cur(nvars);
    // descending lex enumeration by recursion on the first variable
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos + 1 == nvars) {
            cur.exps[pos] = remaining;
            out.push_back(cur);
            cur.exps[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur.exps[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

}  // namespace coinv

#endif  // COINV_MONOMIAL_HPP
