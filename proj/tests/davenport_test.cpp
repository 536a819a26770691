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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "coinv/davenport.hpp"
#include "coinv/invariants.hpp"
#include "coinv/repspec.hpp"

using namespace coinv;

namespace {

FiniteAbelianGroup group(std::vector<long long> factors) {
    return FiniteAbelianGroup{std::move(factors)};
}

/// Exhaustive check that no proper nonempty sub-multiset sums to zero.
bool no_proper_zero_subsum(const FiniteAbelianGroup& g, const ZeroSumSequence& seq) {
    const size_t n = seq.length();
    for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
        std::vector<long long> sum(g.rank(), 0);
        for (size_t i = 0; i < n; ++i) {
            if (!(mask & (size_t{1} << i))) continue;
            for (size_t t = 0; t < g.rank(); ++t)
                sum[t] = (sum[t] + seq.elements[i][t]) % g.invariantFactors[t];
        }
        bool zero = true;
        for (long long s : sum) zero = zero && s == 0;
        if (zero) return false;
    }
    return true;
}

bool sums_to_zero(const FiniteAbelianGroup& g, const ZeroSumSequence& seq) {
    std::vector<long long> sum(g.rank(), 0);
    for (const auto& e : seq.elements)
        for (size_t t = 0; t < g.rank(); ++t)
            sum[t] = (sum[t] + e[t]) % g.invariantFactors[t];
    return std::all_of(sum.begin(), sum.end(), [](long long s) { return s == 0; });
}

}  // namespace

TEST_CASE("exact constants for small groups") {
    CHECK(davenport_exact(group({})) == 1);
    CHECK(davenport_exact(group({2})) == 2);
    CHECK(davenport_exact(group({5})) == 5);
    CHECK(davenport_exact(group({6})) == 6);
    CHECK(davenport_exact(group({2, 2})) == 3);
    CHECK(davenport_exact(group({3, 3})) == 5);
    CHECK(davenport_exact(group({2, 4})) == 5);
    CHECK(davenport_exact(group({2, 2, 2})) == 4);
    CHECK(davenport_exact(group({2, 6})) == 7);
    CHECK(davenport_exact(group({3, 9})) == 11);
}

TEST_CASE("the search respects its order cap") {
    CHECK_THROWS_AS(davenport_exact(group({34}), 16), std::runtime_error);
    CHECK_THROWS_AS(davenport_exact(group({65}), 1000), std::runtime_error);
}

TEST_CASE("factor lists normalize to invariant factors") {
    CHECK(FiniteAbelianGroup::from_factors({2, 3}).invariantFactors ==
          std::vector<long long>{6});
    CHECK(FiniteAbelianGroup::from_factors({4, 6}).invariantFactors ==
          std::vector<long long>{2, 12});
    CHECK(FiniteAbelianGroup::from_factors({2, 2, 3}).invariantFactors ==
          std::vector<long long>{2, 6});
    CHECK(FiniteAbelianGroup::from_factors({1, 1}).invariantFactors.empty());
    CHECK_THROWS_AS(FiniteAbelianGroup::from_factors({0}), std::invalid_argument);
}

TEST_CASE("structure queries") {
    const auto g = group({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.rank() == 2);
    long long p = 0;
    CHECK(g.is_p_group(&p));
    CHECK(p == 2);
    CHECK_FALSE(group({6}).is_p_group());
    CHECK_FALSE(group({}).is_p_group());
    CHECK(group({}).order() == 1);
    CHECK(group({}).exponent() == 1);
}

TEST_CASE("enumeration of small abelian groups") {
    const auto groups = all_abelian_groups(8);
    REQUIRE(groups.size() == 11);
    CHECK(groups[0].invariantFactors.empty());
    CHECK(groups[3].invariantFactors == std::vector<long long>{2, 2});
    CHECK(groups[4].invariantFactors == std::vector<long long>{4});
    CHECK(groups[8].invariantFactors == std::vector<long long>{2, 2, 2});
    CHECK(groups[9].invariantFactors == std::vector<long long>{2, 4});
    CHECK(groups[10].invariantFactors == std::vector<long long>{8});
}

TEST_CASE("closed forms match the exact search where they apply") {
    CHECK(olson_formula(group({3, 9})) == 11);
    CHECK(olson_formula(group({2, 2, 2})) == 4);
    CHECK(olson_formula(FiniteAbelianGroup::from_factors({6, 10})) == 31);
    CHECK_FALSE(olson_formula(group({2, 6, 6})).has_value());
    for (const auto& g : all_abelian_groups(16)) {
        const auto formula = olson_formula(g);
        if (formula) CHECK(*formula == davenport_exact(g));
    }
}

TEST_CASE("witnesses are longest zero-sum-free sequences") {
    for (const auto& factors :
         std::vector<std::vector<long long>>{{4}, {6}, {2, 2}, {3, 3}, {2, 4}}) {
        const auto g = group(factors);
        const auto w = davenport_witness(g);
        CHECK(static_cast<long long>(w.length()) == davenport_exact(g) - 1);
        CHECK(is_zero_sum_free(g, w));
    }
}

TEST_CASE("completion yields a minimal zero-sum sequence") {
    for (const auto& factors : std::vector<std::vector<long long>>{{2, 2}, {6}}) {
        const auto g = group(factors);
        const auto seq = complete_to_zero_sum(g, davenport_witness(g));
        CHECK(static_cast<long long>(seq.length()) == davenport_exact(g));
        CHECK(sums_to_zero(g, seq));
        CHECK(no_proper_zero_subsum(g, seq));
    }
}

TEST_CASE("zero-sum-free recognition") {
    const auto g = group({2, 2});
    CHECK(is_zero_sum_free(g, ZeroSumSequence{{{0, 1}, {1, 0}}}));
    CHECK_FALSE(is_zero_sum_free(g, ZeroSumSequence{{{0, 1}, {0, 1}}}));
    CHECK_FALSE(is_zero_sum_free(g, ZeroSumSequence{{{0, 0}}}));
    CHECK_THROWS_AS(is_zero_sum_free(g, ZeroSumSequence{{{1}}}), std::invalid_argument);
}

TEST_CASE("diagonal realizations validate their prime") {
    const auto g = group({3});
    const ZeroSumSequence seq{{{1}, {1}, {1}}};
    CHECK_THROWS_AS(rep_from_sequence(g, seq, 6), std::invalid_argument);
    CHECK_THROWS_AS(rep_from_sequence(g, seq, 5), std::invalid_argument);
    CHECK_THROWS_AS(rep_from_sequence(group({7}), ZeroSumSequence{{{1}}}, 7),
                    std::invalid_argument);
    const auto rep = rep_from_sequence(g, seq, 7);
    CHECK(rep.order() == 3);
    CHECK(rep.dimension == 3);
}

TEST_CASE("the least usable prime for each exponent") {
    CHECK(smallest_suitable_prime(1) == 2);
    CHECK(smallest_suitable_prime(2) == 3);
    CHECK(smallest_suitable_prime(3) == 7);
    CHECK(smallest_suitable_prime(4) == 5);
    CHECK(smallest_suitable_prime(6) == 7);
    CHECK(smallest_suitable_prime(12) == 13);
}

TEST_CASE("a realized sequence reaches the constant through invariants") {
    // Nonshortenable zero sums of maximal length translate into a diagonal
    // action whose invariant generators top out exactly at that length.
    const auto g = group({2, 2});
    const auto seq = complete_to_zero_sum(g, davenport_witness(g));
    const auto rep = rep_from_sequence(g, seq, smallest_suitable_prime(g.exponent()));
    CHECK(noether_number(rep) == davenport_exact(g));
}
