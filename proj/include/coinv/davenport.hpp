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

#ifndef COINV_DAVENPORT_HPP
#define COINV_DAVENPORT_HPP

#include <optional>
#include <vector>

#include "coinv/rep_builders.hpp"

namespace coinv {

/// Finite abelian group in invariant-factor form: d_1 | d_2 | ... | d_r, each
/// factor at least 2. The empty list is the trivial group.
struct FiniteAbelianGroup {
    std::vector<long long> invariantFactors;

    /// Normalizes an arbitrary factor list (e.g. {6, 10} becomes {2, 30}).
    static FiniteAbelianGroup from_factors(const std::vector<long long>& factors);

    long long order() const {
        long long o = 1;
        for (long long d : invariantFactors) o *= d;
        return o;
    }
    long long exponent() const {
        return invariantFactors.empty() ? 1 : invariantFactors.back();
    }
    size_t rank() const { return invariantFactors.size(); }
    bool is_p_group(long long* prime = nullptr) const;
};

/// A sequence (multiset) of group elements, each a residue tuple along the
/// invariant factors.
struct ZeroSumSequence {
    std::vector<std::vector<long long>> elements;

    size_t length() const { return elements.size(); }
};

/// True when no nonempty sub-multiset sums to the identity.
bool is_zero_sum_free(const FiniteAbelianGroup& g, const ZeroSumSequence& seq);

inline constexpr long long kDefaultDavenportCap = 64;

/// The Davenport constant S(G): one more than the length of the longest
/// zero-sum-free sequence. Exact search; the group order must stay within
/// the cap (and within 64, the reachable-set word size).
long long davenport_exact(const FiniteAbelianGroup& g, long long orderCap = kDefaultDavenportCap);

/// A longest zero-sum-free sequence (length S(G) - 1), lexicographically
/// least among the maxima.
ZeroSumSequence davenport_witness(const FiniteAbelianGroup& g,
                                  long long orderCap = kDefaultDavenportCap);

/// Appends the negated sum, turning a zero-sum-free sequence into a zero-sum
/// sequence with no proper zero-sum subsequence. Applied to a witness this
/// yields a non-shortenable zero sum of the maximal length S(G).
ZeroSumSequence complete_to_zero_sum(const FiniteAbelianGroup& g, const ZeroSumSequence& seq);

/// Olson's closed forms: a + b - 1 for rank <= 2 (after normalization), and
/// 1 + sum (d_i - 1) for p-groups. Absent when neither case applies.
std::optional<long long> olson_formula(const FiniteAbelianGroup& g);

/// Every abelian group of order 1..maxOrder, in invariant-factor form,
/// ordered by (order, factor list).
std::vector<FiniteAbelianGroup> all_abelian_groups(long long maxOrder);

/// Diagonal representation over F_p realizing the characters of the sequence:
/// one variable per element, generator i scaling variable t by
/// zeta_{d_i}^{seq[t][i]}. Requires p = 1 (mod exponent) and p coprime to the
/// group order; an empty sequence yields the trivial action on one variable.
MatrixGroup<Fp> rep_from_sequence(const FiniteAbelianGroup& g, const ZeroSumSequence& seq,
                                  long long p);

}  // namespace coinv

#endif  // COINV_DAVENPORT_HPP
