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

// Shared seeded generators and the randomized property battery. The battery
// is used both by the property test and by the acceptance gate, so the case
// and failure counts must stay deterministic for a fixed seed.

#ifndef COINV_TESTS_TEST_SUPPORT_HPP
#define COINV_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "coinv/invariants.hpp"
#include "coinv/poly_io.hpp"
#include "coinv/rep_builders.hpp"

namespace coinv_tests {

inline constexpr uint64_t kPropertySeed = 20260822;

struct PropertyTally {
    size_t cases = 0;
    size_t failures = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failures;
            if (notes.size() < 20) notes.push_back(what);
        }
    }
};

template <class K>
coinv::Polynomial<K> random_poly(const coinv::PolyRing& ring, std::mt19937_64& rng, int maxDeg,
                                 int maxTerms) {
    coinv::Polynomial<K> f(ring);
    const size_t terms = 1 + rng() % static_cast<size_t>(maxTerms);
    for (size_t t = 0; t < terms; ++t) {
        const int d = static_cast<int>(rng() % static_cast<uint64_t>(maxDeg + 1));
        coinv::Monomial m(ring.nvars);
        for (int i = 0; i < d; ++i) ++m.exps[rng() % ring.nvars];
        const long long c = static_cast<long long>(rng() % 13) - 6;
        f.add_term(m, coinv::field_element<K>(ring.field, c));
    }
    return f;
}

inline coinv::Monomial random_monomial(size_t nvars, std::mt19937_64& rng, int maxDeg) {
    coinv::Monomial m(nvars);
    const int d = static_cast<int>(rng() % static_cast<uint64_t>(maxDeg + 1));
    for (int i = 0; i < d; ++i) ++m.exps[rng() % nvars];
    return m;
}

// --- sub-batteries ---

template <class K>
void ring_axioms_over(PropertyTally& t, const coinv::FieldSpec& field, std::mt19937_64& rng) {
    const coinv::PolyRing ring(3, field);
    for (int i = 0; i < 60; ++i) {
        const auto f = random_poly<K>(ring, rng, 4, 5);
        const auto g = random_poly<K>(ring, rng, 4, 5);
        const auto h = random_poly<K>(ring, rng, 4, 5);
        t.check((f + g) + h == f + (g + h), "addition associativity");
        t.check(f + g == g + f, "addition commutativity");
        t.check(f * g == g * f, "multiplication commutativity");
        t.check((f * g) * h == f * (g * h), "multiplication associativity");
        t.check(f * (g + h) == f * g + f * h, "distributivity");
    }
}

inline void battery_ring_axioms(PropertyTally& t, std::mt19937_64& rng) {
    ring_axioms_over<coinv::Rational>(t, coinv::FieldSpec::rationals(), rng);
    ring_axioms_over<coinv::Fp>(t, coinv::FieldSpec::prime(5), rng);
}

inline void battery_monomial_orders(PropertyTally& t, std::mt19937_64& rng) {
    for (const auto& order : {coinv::MonomialOrder::lex(), coinv::MonomialOrder::grevlex()}) {
        for (int i = 0; i < 50; ++i) {
            auto a = random_monomial(3, rng, 6);
            auto b = random_monomial(3, rng, 6);
            auto c = random_monomial(3, rng, 6);
            const auto w = random_monomial(3, rng, 4);
            const int rel = (order.greater(a, b) ? 1 : 0) + (order.greater(b, a) ? 1 : 0) +
                            (a == b ? 1 : 0);
            t.check(rel == 1, "trichotomy");
            // sort the triple descending with the order, then check transitivity
            std::vector<coinv::Monomial> v{a, b, c};
            std::sort(v.begin(), v.end(),
                      [&](const coinv::Monomial& x, const coinv::Monomial& y) {
                          return order.greater(x, y);
                      });
            t.check(!order.greater(v[2], v[0]), "transitivity");
            if (!(a == b))
                t.check(order.greater(a, b) == order.greater(a * w, b * w),
                        "multiplicative compatibility");
            else
                t.check(a * w == b * w, "multiplication is a function");
            if (!w.is_one())
                t.check(order.greater(a * w, a), "multiples grow");
            else
                t.check(a * w == a, "unit monomial is neutral");
        }
    }
}

template <class K>
void action_axioms_over(PropertyTally& t, const coinv::MatrixGroup<K>& g, std::mt19937_64& rng) {
    const coinv::PolyRing ring(static_cast<size_t>(g.dimension), g.field);
    for (int i = 0; i < 15; ++i) {
        const auto& A = g.elements[rng() % g.elements.size()];
        const auto& B = g.elements[rng() % g.elements.size()];
        const auto f = random_poly<K>(ring, rng, 3, 4);
        const auto h = random_poly<K>(ring, rng, 3, 4);
        t.check(coinv::act(g.identity(), f) == f, "identity acts trivially");
        t.check(coinv::act(A, coinv::act(B, f)) == coinv::act(coinv::DenseMatrix<K>(A * B), f),
                "left action");
        t.check(coinv::act(A, f * h) == coinv::act(A, f) * coinv::act(A, h),
                "action preserves products");
        t.check(coinv::act(A, f + h) == coinv::act(A, f) + coinv::act(A, h),
                "action preserves sums");
    }
}

inline void battery_action_axioms(PropertyTally& t, std::mt19937_64& rng) {
    action_axioms_over(t, coinv::symmetric_rep<coinv::Rational>(coinv::FieldSpec::rationals(), 3),
                       rng);
    action_axioms_over(t, coinv::jordan_rep(3, 2), rng);
    action_axioms_over(t,
                       coinv::diagonal_rep<coinv::Fp>(coinv::FieldSpec::prime(5), {4},
                                                      {{1}, {2}}),
                       rng);
    action_axioms_over(t,
                       coinv::neg_identity_rep<coinv::Rational>(coinv::FieldSpec::rationals(), 2),
                       rng);
}

template <class K>
void reynolds_over(PropertyTally& t, const coinv::MatrixGroup<K>& g, std::mt19937_64& rng) {
    const coinv::PolyRing ring(static_cast<size_t>(g.dimension), g.field);
    for (int i = 0; i < 15; ++i) {
        const auto f = random_poly<K>(ring, rng, 3, 4);
        const auto r = coinv::reynolds(f, g);
        t.check(coinv::reynolds(r, g) == r, "Reynolds idempotency");
        const auto& A = g.elements[rng() % g.elements.size()];
        t.check(coinv::act(A, r) == r, "Reynolds image is invariant");
    }
}

inline void battery_reynolds(PropertyTally& t, std::mt19937_64& rng) {
    reynolds_over(t, coinv::symmetric_rep<coinv::Rational>(coinv::FieldSpec::rationals(), 2), rng);
    reynolds_over(t, coinv::symmetric_rep<coinv::Rational>(coinv::FieldSpec::rationals(), 3), rng);
    reynolds_over(t,
                  coinv::diagonal_rep<coinv::Fp>(coinv::FieldSpec::prime(7), {3}, {{1}, {1}}),
                  rng);
    reynolds_over(t, coinv::diagonal_rep<coinv::Fp>(coinv::FieldSpec::prime(5), {4}, {{1}}), rng);
}

inline void battery_groebner_idempotency(PropertyTally& t, std::mt19937_64& rng) {
    const coinv::PolyRing ring(2, coinv::FieldSpec::prime(5));
    const auto order = coinv::MonomialOrder::lex();
    auto text_set = [&](const std::vector<coinv::Polynomial<coinv::Fp>>& polys) {
        std::vector<std::string> out;
        for (const auto& p : polys) out.push_back(coinv::to_text(p));
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int i = 0; i < 30; ++i) {
        std::vector<coinv::Polynomial<coinv::Fp>> gens;
        while (gens.size() < 2) {
            auto f = random_poly<coinv::Fp>(ring, rng, 3, 4);
            if (!f.is_zero_poly()) gens.push_back(f);
        }
        const auto gb = coinv::buchberger(gens, order);
        const auto again = coinv::buchberger(gb.basis, order);
        t.check(text_set(gb.basis) == text_set(again.basis),
                "reduced basis is a Buchberger fixed point");
        // a random ideal combination must reduce to zero
        const auto u = random_poly<coinv::Fp>(ring, rng, 2, 3);
        const auto v = random_poly<coinv::Fp>(ring, rng, 2, 3);
        const auto member = u * gens[0] + v * gens[1];
        t.check(coinv::normal_form(member, gb).is_zero_poly(),
                "ideal combinations reduce to zero");
    }
}

inline void battery_order_independence(PropertyTally& t) {
    using coinv::FieldSpec;
    auto check_group = [&](const auto& g) {
        const auto lex = coinv::coinvariant_summary(g, -1, coinv::MonomialOrder::lex());
        const auto grevlex = coinv::coinvariant_summary(g, -1, coinv::MonomialOrder::grevlex());
        std::vector<int> rev(static_cast<size_t>(g.dimension));
        for (size_t i = 0; i < rev.size(); ++i) rev[i] = static_cast<int>(rev.size() - 1 - i);
        const auto permuted =
            coinv::coinvariant_summary(g, -1, coinv::MonomialOrder::lex_with(rev));
        t.check(lex == grevlex, "summary agrees between lex and grevlex");
        t.check(lex == permuted, "summary survives variable reordering");
    };
    check_group(coinv::symmetric_rep<coinv::Rational>(FieldSpec::rationals(), 2));
    check_group(coinv::symmetric_rep<coinv::Rational>(FieldSpec::rationals(), 3));
    check_group(coinv::neg_identity_rep<coinv::Rational>(FieldSpec::rationals(), 2));
    check_group(coinv::jordan_rep(2, 2));
    check_group(coinv::jordan_rep(3, 2));
    check_group(coinv::diagonal_rep<coinv::Fp>(FieldSpec::prime(7), {3}, {{1}, {1}}));
    check_group(coinv::diagonal_rep<coinv::Fp>(FieldSpec::prime(5), {4}, {{1}, {2}}));
    check_group(coinv::diagonal_rep<coinv::Rational>(FieldSpec::rationals(), {2, 2},
                                                     {{1, 0}, {0, 1}}));
}

/// Runs every sub-battery with a deterministic RNG stream.
inline PropertyTally run_property_battery(uint64_t seed = kPropertySeed) {
    PropertyTally t;
    std::mt19937_64 rng(seed);
    battery_ring_axioms(t, rng);
    battery_monomial_orders(t, rng);
    battery_action_axioms(t, rng);
    battery_reynolds(t, rng);
    battery_groebner_idempotency(t, rng);
    battery_order_independence(t);
    return t;
}

}  // namespace coinv_tests

#endif  // COINV_TESTS_TEST_SUPPORT_HPP
