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

#include "doctest.h"

#include "coinv/groebner.hpp"
#include "coinv/poly_io.hpp"
#include "coinv/polynomial.hpp"

using namespace coinv;

namespace {
const PolyRing kQ2(2, FieldSpec::rationals());
const PolyRing kQ3(3, FieldSpec::rationals());
const PolyRing kF2(2, FieldSpec::prime(2));

Polynomial<Rational> q2(const std::string& s) { return parse_polynomial<Rational>(kQ2, s); }
Polynomial<Rational> q3(const std::string& s) { return parse_polynomial<Rational>(kQ3, s); }
}  // namespace

TEST_CASE("rational scalar arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3).inverse() == Rational(1, 3));
    CHECK(Rational(-1, 2) * Rational(-2) == Rational(1));
}

TEST_CASE("prime field scalar arithmetic") {
    const FieldSpec f7 = FieldSpec::prime(7);
    CHECK(field_element<Fp>(f7, 3).inverse() == field_element<Fp>(f7, 5));
    CHECK(field_element<Fp>(f7, -1) == field_element<Fp>(f7, 6));
    CHECK((field_element<Fp>(f7, 4) + field_element<Fp>(f7, 5)).residue() == 2);
    const Fp root = root_of_unity<Fp>(f7, 3);
    CHECK((root * root * root).is_one());
    CHECK_FALSE(root.is_one());
}

TEST_CASE("monomial operations") {
    const Monomial a({2, 1});
    const Monomial b({1, 3});
    CHECK((a * b) == Monomial({3, 4}));
    CHECK(Monomial::lcm(a, b) == Monomial({2, 3}));
    CHECK(Monomial({1, 0}).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK_THROWS_AS(a / b, std::invalid_argument);
    size_t var = 0;
    CHECK(Monomial({0, 3}).is_pure_power(&var));
    CHECK(var == 1);
    CHECK_FALSE(a.is_pure_power());
}

TEST_CASE("polynomial text round trip and format") {
    const auto f = q3("2*x1^2*x2 - 1/3*x3 + 1");
    CHECK(to_text(f) == "2*x1^2*x2 - 1/3*x3 + 1");
    CHECK(parse_polynomial<Rational>(kQ3, to_text(f)) == f);
    CHECK(to_text(Polynomial<Rational>::zero(kQ3)) == "0");
    CHECK(parse_polynomial<Rational>(kQ3, "x1 - x1").is_zero_poly());
}

TEST_CASE("binomial squares over Q and F2") {
    CHECK(q2("x1 + x2").pow(2) == q2("x1^2 + 2*x1*x2 + x2^2"));
    const auto s = parse_polynomial<Fp>(kF2, "x1 + x2");
    CHECK(s.pow(2) == parse_polynomial<Fp>(kF2, "x1^2 + x2^2"));
    CHECK(q2("x1 + 1").pow(3) == q2("x1^3 + 3*x1^2 + 3*x1 + 1"));
}

TEST_CASE("homogeneous structure") {
    const auto f = q2("x1^2 + 3*x1*x2 + x2 + 5");
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.homogeneous_component(2) == q2("x1^2 + 3*x1*x2"));
    CHECK(f.homogeneous_component(1) == q2("x2"));
    CHECK(f.homogeneous_component(3).is_zero_poly());
    const auto parts = f.homogeneous_components();
    CHECK(parts.size() == 3);
    CHECK(parts.at(0) == q2("5"));
}

TEST_CASE("lead terms depend on the order") {
    const auto f = q2("x1^2 + x2^3");
    CHECK(f.lead_monomial(MonomialOrder::lex()) == Monomial({2, 0}));
    CHECK(f.lead_monomial(MonomialOrder::grevlex()) == Monomial({0, 3}));
    CHECK(q2("3*x1 + x2").monic(MonomialOrder::lex()) == q2("x1 + 1/3*x2"));
}

TEST_CASE("multivariate division with remainder") {
    // divide x1^2 x2 + x1 x2^2 + x2^2 by {x1 x2 - 1, x2^2 - 1} under lex
    const auto f = q2("x1^2*x2 + x1*x2^2 + x2^2");
    const std::vector<Polynomial<Rational>> divisors = {q2("x1*x2 - 1"), q2("x2^2 - 1")};
    std::vector<Polynomial<Rational>> quotients;
    const auto r = detail::divide(f, divisors, MonomialOrder::lex(), &quotients);
    CHECK(r == q2("x1 + x2 + 1"));
    CHECK(quotients[0] == q2("x1 + x2"));
    CHECK(quotients[1] == q2("1"));
    Polynomial<Rational> rebuilt = r;
    for (size_t i = 0; i < divisors.size(); ++i) rebuilt = rebuilt + quotients[i] * divisors[i];
    CHECK(rebuilt == f);
}

TEST_CASE("substitution composes linear maps") {
    const auto f = q2("x1^2 - x2");
    const std::vector<Polynomial<Rational>> images = {q2("x1 + x2"), q2("x2")};
    CHECK(f.substitute(images) == q2("x1^2 + 2*x1*x2 + x2^2 - x2"));
    // substituting into a larger ring
    const auto g = parse_polynomial<Rational>(PolyRing(1, FieldSpec::rationals()), "x1^2");
    CHECK(g.substitute({q2("x1 - x2")}) == q2("x1^2 - 2*x1*x2 + x2^2"));
}

TEST_CASE("substitution validates its images") {
    const auto f = q2("x1");
    const std::vector<Polynomial<Rational>> wrong = {
        parse_polynomial<Rational>(kQ3, "x1"), parse_polynomial<Rational>(kQ3, "x2")};
    CHECK(f.substitute(wrong) == parse_polynomial<Rational>(kQ3, "x1"));
    CHECK_THROWS_AS(f.substitute({q2("x1")}), std::invalid_argument);
}

TEST_CASE("coefficient lookup and term editing") {
    auto f = q2("x1 + 2*x2");
    CHECK(f.coefficient(Monomial({0, 1})) == Rational(2));
    CHECK(f.coefficient(Monomial({5, 0})) == Rational(0));
    f.add_term(Monomial({0, 1}), Rational(-2));
    CHECK(f == q2("x1"));
}
