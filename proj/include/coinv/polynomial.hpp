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

#ifndef COINV_POLYNOMIAL_HPP
#define COINV_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "coinv/fields.hpp"
#include "coinv/monomial.hpp"

namespace coinv {

/// A polynomial ring F[x1..xn] identified by variable count and coefficient
/// field. Two rings are the same iff both agree.
struct PolyRing {
    size_t nvars = 0;
    FieldSpec field;

    PolyRing() = default;
    PolyRing(size_t n, FieldSpec f) : nvars(n), field(f) {}

    bool operator==(const PolyRing&) const = default;
};

inline void check_same_ring(const PolyRing& a, const PolyRing& b) {
    if (!(a == b)) throw std::invalid_argument("polynomial rings differ");
}

/// Sparse polynomial with exact coefficients of type K (Rational or Fp).
/// Terms are stored in one fixed canonical order (descending identity lex) so
/// iteration, printing and hashing are deterministic; monomial orders for
/// Groebner computations are passed to lead_term explicitly. Invariant: no
/// stored coefficient is zero.
template <typename K>
class Polynomial {
   public:
    using TermMap = std::map<Monomial, K, CanonicalTermDesc>;

    PolyRing ring;
    TermMap terms;

    Polynomial() = default;
    explicit Polynomial(PolyRing r) : ring(std::move(r)) {
        static_assert(std::is_same_v<K, Rational> || std::is_same_v<K, Fp>,
                      "K must be Rational or Fp");
        if (!scalar_matches_field<K>(ring.field))
            throw std::invalid_argument("Polynomial: scalar type does not match coefficient field");
    }

    static Polynomial zero(const PolyRing& r) { return Polynomial(r); }
    static Polynomial constant(const PolyRing& r, const K& c) {
        Polynomial p(r);
        if (!is_zero(c)) p.terms.emplace(Monomial::one(r.nvars), c);
        return p;
    }
    static Polynomial constant(const PolyRing& r, long long c) {
        return constant(r, field_element<K>(r.field, c));
    }
    static Polynomial variable(const PolyRing& r, size_t i, int32_t e = 1) {
        if (i >= r.nvars) throw std::out_of_range("Polynomial::variable index");
        Polynomial p(r);
        if (e != 0)
            p.terms.emplace(Monomial::variable(r.nvars, i, e), field_one<K>(r.field));
        else
            return constant(r, 1);
        return p;
    }
    static Polynomial monomial_term(const PolyRing& r, const Monomial& m, const K& c) {
        if (m.nvars() != r.nvars) throw std::invalid_argument("monomial_term: nvars mismatch");
        Polynomial p(r);
        if (!is_zero(c)) p.terms.emplace(m, c);
        return p;
    }

    bool is_zero_poly() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_one());
    }
    size_t term_count() const { return terms.size(); }

    /// Total degree. The zero polynomial has no degree.
    int degree() const {
        if (terms.empty()) throw std::domain_error("degree of zero polynomial");
        int d = 0;
        for (const auto& [m, c] : terms) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = terms.begin()->first.degree();
        for (const auto& [m, c] : terms)
            if (m.degree() != d) return false;
        return true;
    }

    /// Degree-d part (zero polynomial when absent).
    Polynomial homogeneous_component(int d) const {
        Polynomial out(ring);
        for (const auto& [m, c] : terms)
            if (m.degree() == d) out.terms.emplace(m, c);
        return out;
    }

    std::map<int, Polynomial> homogeneous_components() const {
        std::map<int, Polynomial> out;
        for (const auto& [m, c] : terms) {
            auto [it, fresh] = out.try_emplace(m.degree(), ring);
            it->second.terms.emplace(m, c);
        }
        return out;
    }

    K coefficient(const Monomial& m) const {
        auto it = terms.find(m);
        if (it == terms.end()) return field_zero<K>(ring.field);
        return it->second;
    }

    /// Largest term under the given order.
    std::pair<Monomial, K> lead_term(const MonomialOrder& order) const {
        if (terms.empty()) throw std::domain_error("lead term of zero polynomial");
        auto best = terms.begin();
        for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }
    Monomial lead_monomial(const MonomialOrder& order) const { return lead_term(order).first; }
    K lead_coeff(const MonomialOrder& order) const { return lead_term(order).second; }

    /// Scale so the lead coefficient under `order` is 1.
    Polynomial monic(const MonomialOrder& order) const {
        if (terms.empty()) return *this;
        K inv = lead_coeff(order).inverse();
        return *this * inv;
    }

    void add_term(const Monomial& m, const K& c) {
        if (is_zero(c)) return;
        auto [it, fresh] = terms.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a.ring, b.ring);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.ring);
        K neg = field_zero<K>(a.ring.field) - field_one<K>(a.ring.field);
        for (const auto& [m, c] : a.terms) r.terms.emplace(m, c * neg);
        r.strip_zeros();
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a.ring, b.ring);
        Polynomial r = a;
        K neg = field_zero<K>(a.ring.field) - field_one<K>(a.ring.field);
        for (const auto& [m, c] : b.terms) r.add_term(m, c * neg);
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const K& s) {
        Polynomial r(a.ring);
        if (is_zero(s)) return r;
        for (const auto& [m, c] : a.terms) {
            K p = c * s;
            if (!is_zero(p)) r.terms.emplace(m, p);
        }
        return r;
    }
    friend Polynomial operator*(const K& s, const Polynomial& a) { return a * s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a.ring, b.ring);
        Polynomial r(a.ring);
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
        return r;
    }
    /// a += m * b, the inner step of polynomial division.
    void add_scaled(const Monomial& m, const K& c, const Polynomial& b) {
        check_same_ring(ring, b.ring);
        for (const auto& [mb, cb] : b.terms) add_term(m * mb, c * cb);
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    /// Substitute images[i] for x_i. All images must live in one common ring,
    /// which becomes the ring of the result. Powers of each image are cached
    /// across terms.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ring.nvars)
            throw std::invalid_argument("substitute: one image per variable required");
        PolyRing target = images.empty() ? ring : images.front().ring;
        for (const auto& g : images) check_same_ring(g.ring, target);
        if (target.field.characteristic != ring.field.characteristic)
            throw std::invalid_argument("substitute: coefficient field changed");
        // powers[i][e] = images[i]^e, filled on demand
        std::vector<std::vector<Polynomial>> powers(images.size());
        for (size_t i = 0; i < images.size(); ++i)
            powers[i].push_back(constant(target, 1));
        auto power = [&](size_t i, int32_t e) -> const Polynomial& {
            auto& cache = powers[i];
            while (static_cast<int32_t>(cache.size()) <= e)
                cache.push_back(cache.back() * images[i]);
            return cache[e];
        };
        Polynomial out(target);
        for (const auto& [m, c] : terms) {
            Polynomial t = constant(target, 1) * c;
            for (size_t i = 0; i < m.exps.size(); ++i)
                if (m.exps[i] > 0) t = t * power(i, m.exps[i]);
            out = out + t;
        }
        return out;
    }

    /// Evaluate at a point given by one field element per variable.
    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ring.nvars)
            throw std::invalid_argument("evaluate: one value per variable required");
        K acc = field_zero<K>(ring.field);
        for (const auto& [m, c] : terms) {
            K t = c;
            for (size_t i = 0; i < m.exps.size(); ++i)
                for (int32_t e = 0; e < m.exps[i]; ++e) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const { return ring == o.ring && terms == o.terms; }

   private:
    void strip_zeros() {
        for (auto it = terms.begin(); it != terms.end();)
            it = is_zero(it->second) ? terms.erase(it) : std::next(it);
    }
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

}  // namespace coinv

#endif  // COINV_POLYNOMIAL_HPP
