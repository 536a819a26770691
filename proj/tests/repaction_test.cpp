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

#include "coinv/poly_io.hpp"
#include "coinv/rep_builders.hpp"
#include "coinv/repspec.hpp"

using namespace coinv;
using nlohmann::ordered_json;

namespace {
Polynomial<Fp> f2(const std::string& s) {
    return parse_polynomial<Fp>(PolyRing(2, FieldSpec::prime(2)), s);
}
Polynomial<Rational> q3(const std::string& s) {
    return parse_polynomial<Rational>(PolyRing(3, FieldSpec::rationals()), s);
}

template <typename K>
bool same_matrix(const DenseMatrix<K>& a, const DenseMatrix<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}
}  // namespace

TEST_CASE("the action substitutes columns: a unipotent block") {
    const auto g = jordan_rep(2, 2);
    const auto& m = g.elements[g.generatorIndices.at(0)];
    CHECK(act(m, f2("x1")) == f2("x1"));
    CHECK(act(m, f2("x2")) == f2("x1 + x2"));
    CHECK(act(m, f2("x2^2")) == f2("x1^2 + x2^2"));
}

TEST_CASE("acting is a left action compatible with products") {
    const auto g = symmetric_rep<Rational>(FieldSpec::rationals(), 3);
    const auto& a = g.elements[g.generatorIndices.at(0)];
    const auto& b = g.elements[g.generatorIndices.at(1)];
    const auto f = q3("x1^2*x2 + 5*x3");
    const auto h = q3("x1 - x2");
    CHECK(act(a, act(b, f)) == act(DenseMatrix<Rational>(a * b), f));
    CHECK(act(a, f * h) == act(a, f) * act(a, h));
    CHECK(act(g.identity(), f) == f);
}

TEST_CASE("symmetric group representation") {
    const auto g = symmetric_rep<Rational>(FieldSpec::rationals(), 3);
    CHECK(g.order() == 6);
    CHECK(g.dimension == 3);
    CHECK(same_matrix<Rational>(g.identity(), DenseMatrix<Rational>::Identity(3, 3)));
    // transpositions generate: the two generators square to the identity
    for (size_t idx : g.generatorIndices) {
        const auto& m = g.elements[idx];
        CHECK(same_matrix<Rational>(m * m, g.identity()));
    }
}

TEST_CASE("jordan block representation") {
    const auto g = jordan_rep(3, 2);
    CHECK(g.order() == 3);
    CHECK(g.dimension == 2);
    const auto& m = g.elements[g.generatorIndices.at(0)];
    CHECK(m(0, 0).residue() == 1);
    CHECK(m(0, 1).residue() == 1);
    CHECK(m(1, 0).residue() == 0);
    CHECK(m(1, 1).residue() == 1);
    CHECK_THROWS_AS(jordan_rep(2, 3), std::invalid_argument);  // block size capped at p
}

TEST_CASE("diagonal representation scales by roots of unity") {
    const auto g = diagonal_rep<Fp>(FieldSpec::prime(5), {4}, {{1}, {2}});
    CHECK(g.order() == 4);
    CHECK(g.dimension == 2);
    const PolyRing ring(2, FieldSpec::prime(5));
    const auto& m = g.elements[g.generatorIndices.at(0)];
    const auto x2 = parse_polynomial<Fp>(ring, "x2");
    // weight 2 under the order-4 character: scaling by the square of the root
    const Fp root = root_of_unity<Fp>(FieldSpec::prime(5), 4);
    CHECK(act(m, x2) == x2 * (root * root));
}

TEST_CASE("minus identity and cyclic permutation representations") {
    CHECK(neg_identity_rep<Rational>(FieldSpec::rationals(), 2).order() == 2);
    CHECK(cyclic_permutation_rep<Rational>(FieldSpec::rationals(), 4).order() == 4);
    CHECK(trivial_rep<Rational>(FieldSpec::rationals(), 5).order() == 1);
}

TEST_CASE("regular representation permutes the group itself") {
    const auto base = cyclic_permutation_rep<Rational>(FieldSpec::rationals(), 3);
    const auto reg = regular_rep<Rational, Rational>(FieldSpec::rationals(), base);
    CHECK(reg.order() == 3);
    CHECK(reg.dimension == 3);
    for (const auto& m : reg.elements)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                CHECK((m(i, j) == Rational(0) || m(i, j) == Rational(1)));
}

TEST_CASE("vector copies act diagonally with source-major variables") {
    const auto base = symmetric_rep<Rational>(FieldSpec::rationals(), 2);
    const auto doubled = vector_copies(base, 2);
    CHECK(doubled.dimension == 4);
    CHECK(doubled.order() == 2);
    const PolyRing ring(4, FieldSpec::rationals());
    const auto& swap = doubled.elements[doubled.generatorIndices.at(0)];
    // variable (source 0, copy 0) maps to (source 1, copy 0), i.e. x1 -> x3
    CHECK(act(swap, parse_polynomial<Rational>(ring, "x1")) ==
          parse_polynomial<Rational>(ring, "x3"));
    CHECK(act(swap, parse_polynomial<Rational>(ring, "x2")) ==
          parse_polynomial<Rational>(ring, "x4"));
}

TEST_CASE("subgroups from generator subsets") {
    const auto g = symmetric_rep<Rational>(FieldSpec::rationals(), 3);
    CHECK(subgroup_generated(g, {g.generatorIndices.at(0)}).order() == 2);
    CHECK(subgroup_generated(g, {}).order() == 1);
    CHECK(subgroup_generated(g, {g.generatorIndices.at(0), g.generatorIndices.at(1)}).order() ==
          6);
}

TEST_CASE("multiplication table indexes products") {
    const auto g = symmetric_rep<Rational>(FieldSpec::rationals(), 3);
    const auto table = multiplication_table(g);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(same_matrix<Rational>(g.elements[table[i][j]],
                                        g.elements[i] * g.elements[j]));
}

TEST_CASE("direct sums pair the generators blockwise") {
    const auto sum = std::get<MatrixGroup<Rational>>(build_rep(ordered_json{
        {"field", {{"char", 0}}},
        {"constructor", "direct_sum"},
        {"params",
         {{"summands",
           ordered_json::array(
               {ordered_json{{"constructor", "symmetric"}, {"params", {{"n", 2}}}},
                ordered_json{{"constructor", "matrices"},
                             {"matrices", ordered_json::array({ordered_json::array({"-1"})})}}})}}}}));
    CHECK(sum.dimension == 3);
    CHECK(sum.order() == 2);
    const auto& m = sum.elements[sum.generatorIndices.at(0)];
    CHECK(m(0, 1) == Rational(1));
    CHECK(m(2, 2) == Rational(-1));
}

TEST_CASE("repspec shorthand and JSON agree") {
    const auto fromShorthand = build_rep(repspec_from_shorthand("symmetric:3"));
    const auto explicitJson = build_rep(ordered_json{
        {"field", {{"char", 0}}}, {"constructor", "symmetric"}, {"params", {{"n", 3}}}});
    CHECK(order_of(fromShorthand) == 6);
    CHECK(order_of(explicitJson) == 6);
    CHECK(dimension_of(fromShorthand) == 3);
    CHECK(field_of(fromShorthand).characteristic == 0);
    const auto jordan = build_rep(repspec_from_shorthand("jordan:3,2"));
    CHECK(field_of(jordan).characteristic == 3);
    CHECK(order_of(jordan) == 3);
}

TEST_CASE("matrix closure from explicit generators") {
    const ordered_json rotation{
        {"field", {{"char", 0}}},
        {"constructor", "matrices"},
        {"matrices",
         ordered_json::array({ordered_json::array({"0", "-1", "1", "0"})})}};
    CHECK(order_of(build_rep(rotation)) == 4);
    CHECK_THROWS_AS(build_rep(rotation, 3), std::runtime_error);
}

TEST_CASE("repspec rejects bad input") {
    CHECK_THROWS_AS(build_rep(ordered_json{{"field", {{"char", 4}}},
                                           {"constructor", "symmetric"},
                                           {"params", {{"n", 2}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_rep(ordered_json{{"constructor", "unknown"}}), std::invalid_argument);
    CHECK_THROWS_AS(repspec_from_shorthand("bogus:1"), std::invalid_argument);
}

TEST_CASE("canonical repspec form is idempotent") {
    const auto spec = repspec_from_shorthand("negid:2");
    const auto canon = canonical_repspec(spec);
    CHECK(canonical_repspec(canon) == canon);
    CHECK(canon.at("constructor") == "matrices");
}
