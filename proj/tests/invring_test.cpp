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

#include <string>

#include "doctest.h"

#include "coinv/invariants.hpp"
#include "coinv/poly_io.hpp"
#include "coinv/rep_builders.hpp"

using namespace coinv;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

Polynomial<Rational> q2(const std::string& s) {
    return parse_polynomial<Rational>(PolyRing(2, kQ), s);
}
}  // namespace

TEST_CASE("transfer sums over the group") {
    const auto g = symmetric_rep<Rational>(kQ, 2);
    CHECK(transfer(q2("x1"), g) == q2("x1 + x2"));
    CHECK(transfer(q2("x1^2"), g) == q2("x1^2 + x2^2"));
    const auto j = jordan_rep(2, 2);
    const PolyRing f2ring(2, FieldSpec::prime(2));
    // in characteristic 2 the transfer of x2 collapses to x1
    CHECK(transfer(parse_polynomial<Fp>(f2ring, "x2"), j) ==
          parse_polynomial<Fp>(f2ring, "x1"));
}

TEST_CASE("reynolds averages and projects") {
    const auto g = symmetric_rep<Rational>(kQ, 2);
    CHECK(reynolds(q2("x1"), g) == q2("1/2*x1 + 1/2*x2"));
    const auto r = reynolds(q2("x1^2*x2"), g);
    CHECK(reynolds(r, g) == r);
    CHECK(act(g.elements[g.generatorIndices.at(0)], r) == r);
    CHECK_THROWS_AS(reynolds(parse_polynomial<Fp>(PolyRing(2, FieldSpec::prime(2)), "x1"),
                             jordan_rep(2, 2)),
                    std::domain_error);
}

TEST_CASE("modularity detection") {
    CHECK(is_modular(jordan_rep(2, 2)));
    CHECK(is_modular(jordan_rep(3, 2)));
    CHECK_FALSE(is_modular(symmetric_rep<Rational>(kQ, 3)));
    CHECK_FALSE(is_modular(diagonal_rep<Fp>(FieldSpec::prime(7), {3}, {{1}, {1}})));
}

TEST_CASE("invariant space dimensions for the symmetric group") {
    const auto g3 = symmetric_rep<Rational>(kQ, 3);
    // dimensions follow partitions of d into parts of size at most 3
    CHECK(invariant_basis(g3, 1).basis.size() == 1);
    CHECK(invariant_basis(g3, 2).basis.size() == 2);
    CHECK(invariant_basis(g3, 3).basis.size() == 3);
    CHECK(invariant_basis(g3, 4).basis.size() == 4);
    for (const auto& f : invariant_basis(g3, 3).basis)
        for (size_t idx : g3.generatorIndices) CHECK(act(g3.elements[idx], f) == f);
}

TEST_CASE("invariant spaces carry echelon markers") {
    const auto g = symmetric_rep<Rational>(kQ, 2);
    const auto space = invariant_basis(g, 2);
    CHECK(space.basis.size() == 2);
    CHECK(space.markers.size() == 2);
    for (size_t i = 0; i < space.basis.size(); ++i) {
        // each marker monomial appears with coefficient 1 in its own basis
        // element and 0 in the others
        for (size_t j = 0; j < space.basis.size(); ++j) {
            const Rational c = space.basis[j].coefficient(space.markers[i]);
            CHECK(c == (i == j ? Rational(1) : Rational(0)));
        }
    }
}

TEST_CASE("hilbert ideal of the two-variable symmetric group") {
    const auto g = symmetric_rep<Rational>(kQ, 2);
    const auto ideal = hilbert_ideal(g);
    CHECK(ideal.generatorDegrees == std::vector<int>{1, 2});
    const auto s = coinvariant_summary(g);
    CHECK(s.dimension == 2);
    CHECK(s.topDegree == 1);
    CHECK(s.hilbertSeries == std::vector<long long>{1, 1});
}

TEST_CASE("coinvariants of the natural three-variable symmetric action") {
    const auto s = coinvariant_summary(symmetric_rep<Rational>(kQ, 3));
    CHECK(s.dimension == 6);
    CHECK(s.topDegree == 3);
    CHECK(s.hilbertSeries == std::vector<long long>{1, 2, 2, 1});
}

TEST_CASE("coinvariants of minus identity on two variables") {
    const auto g = neg_identity_rep<Rational>(kQ, 2);
    const auto s = coinvariant_summary(g);
    CHECK(s.dimension == 3);
    CHECK(s.topDegree == 1);
    CHECK(s.hilbertSeries == std::vector<long long>{1, 2});
    const auto gens = minimal_generators(g);
    CHECK(gens.degrees == std::vector<int>{2, 2, 2});
    CHECK(noether_number(g) == 2);
    CHECK_FALSE(is_polynomial(g));
}

TEST_CASE("coinvariants of a scaling action in characteristic seven") {
    const auto g = diagonal_rep<Fp>(FieldSpec::prime(7), {3}, {{1}, {1}});
    const auto s = coinvariant_summary(g);
    CHECK(s.dimension == 6);
    CHECK(s.topDegree == 2);
    CHECK(s.hilbertSeries == std::vector<long long>{1, 2, 3});
    CHECK(noether_number(g) == 3);
}

TEST_CASE("coinvariants of unipotent blocks") {
    const auto s2 = coinvariant_summary(jordan_rep(2, 2));
    CHECK(s2.dimension == 2);
    CHECK(s2.topDegree == 1);
    const auto s3 = coinvariant_summary(jordan_rep(3, 2));
    CHECK(s3.dimension == 3);
    CHECK(s3.topDegree == 2);
    CHECK(s3.hilbertSeries == std::vector<long long>{1, 1, 1});
    CHECK(hilbert_ideal(jordan_rep(2, 2)).generatorDegrees == std::vector<int>{1, 2});
}

TEST_CASE("noether numbers of small permutation groups") {
    CHECK(noether_number(symmetric_rep<Rational>(kQ, 2)) == 2);
    CHECK(noether_number(symmetric_rep<Rational>(kQ, 3)) == 3);
    CHECK(noether_number(jordan_rep(2, 2)) == 2);
    CHECK(noether_number(diagonal_rep<Fp>(FieldSpec::prime(5), {4}, {{1}})) == 4);
}

TEST_CASE("polynomial invariant ring detection") {
    CHECK(is_polynomial(symmetric_rep<Rational>(kQ, 2)));
    CHECK(is_polynomial(symmetric_rep<Rational>(kQ, 3)));
    CHECK(is_polynomial(diagonal_rep<Fp>(FieldSpec::prime(5), {4}, {{1}})));
    CHECK_FALSE(is_polynomial(neg_identity_rep<Rational>(kQ, 2)));
}

TEST_CASE("group order against coinvariant dimension") {
    const auto strict = steinberg_check(neg_identity_rep<Rational>(kQ, 2));
    CHECK(strict.coinvariantDim == 3);
    CHECK(strict.groupOrder == 2);
    CHECK_FALSE(strict.isPolynomial);
    CHECK(strict.consistent);
    const auto equal = steinberg_check(symmetric_rep<Rational>(kQ, 3));
    CHECK(equal.coinvariantDim == 6);
    CHECK(equal.groupOrder == 6);
    CHECK(equal.isPolynomial);
    CHECK(equal.consistent);
}

TEST_CASE("a conjugated representation has the same coinvariants") {
    // conjugating the swap by a shear leaves no monomial structure, forcing
    // the dense invariant-space path; the graded quotient cannot change
    FieldSpec field = kQ;
    DenseMatrix<Rational> m(2, 2);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(0);
    m(1, 0) = Rational(1);
    m(1, 1) = Rational(-1);
    const auto g = close_group<Rational>({m}, field);
    CHECK(g.order() == 2);
    const auto s = coinvariant_summary(g);
    CHECK(s.dimension == 2);
    CHECK(s.topDegree == 1);
    CHECK(s.hilbertSeries == std::vector<long long>{1, 1});
}

TEST_CASE("degree caps abort runaway searches") {
    CHECK(default_degree_cap(jordan_rep(2, 2)) == 4);
    CHECK_THROWS_AS(hilbert_ideal(symmetric_rep<Rational>(kQ, 3), 2), std::runtime_error);
}
