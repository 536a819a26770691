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

#ifndef COINV_POLARIZATION_HPP
#define COINV_POLARIZATION_HPP

#include <map>
#include <vector>

#include "coinv/invariants.hpp"

namespace coinv {

/// Graded-lex on multi-indices: lower total degree first, then lexicographic.
struct MultiIndexGradedLess {
    bool operator()(const std::vector<int32_t>& a, const std::vector<int32_t>& b) const {
        int da = 0, db = 0;
        for (int32_t x : a) da += x;
        for (int32_t x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Coefficients of the polarization of an n-variable polynomial into m
/// vector copies: substituting x_i -> sum_k x_{i,k} t_k and collecting by the
/// t-multidegree (i_1,...,i_m). Target variable (i,k) sits at index i*m + k,
/// matching vector_copies. Every coefficient of a homogeneous input is
/// homogeneous of the same degree.
template <typename K>
struct PolarizationResult {
    PolyRing sourceRing;
    PolyRing targetRing;
    int copies = 1;
    std::map<std::vector<int32_t>, Polynomial<K>, MultiIndexGradedLess> coefficients;
};

template <typename K>
PolarizationResult<K> polarize(const Polynomial<K>& f, int m) {
    if (m < 1) throw std::invalid_argument("polarize: copy count must be >= 1");
    const size_t n = f.ring.nvars;
    const auto mm = static_cast<size_t>(m);
    PolarizationResult<K> out;
    out.sourceRing = f.ring;
    out.targetRing = PolyRing(n * mm, f.ring.field);
    out.copies = m;

    // substitute in the extended ring B[t_1..t_m]; t_k lives at index n*m + k
    PolyRing ext(n * mm + mm, f.ring.field);
    std::vector<Polynomial<K>> images;
    images.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Polynomial<K> img(ext);
        for (size_t k = 0; k < mm; ++k) {
            Monomial mono(ext.nvars);
            mono.exps[i * mm + k] = 1;
            mono.exps[n * mm + k] = 1;
            img.add_term(mono, field_one<K>(ext.field));
        }
        images.push_back(std::move(img));
    }
    Polynomial<K> substituted = f.substitute(images);

    for (const auto& [mono, c] : substituted.terms) {
        std::vector<int32_t> tIndex(mono.exps.begin() + static_cast<std::ptrdiff_t>(n * mm),
                                    mono.exps.end());
        Monomial bPart(out.targetRing.nvars);
        std::copy(mono.exps.begin(), mono.exps.begin() + static_cast<std::ptrdiff_t>(n * mm),
                  bPart.exps.begin());
        auto [it, fresh] = out.coefficients.try_emplace(std::move(tIndex), out.targetRing);
        it->second.add_term(bPart, c);
    }
    // a cancellation cannot leave a zero coefficient behind, but trim defensively
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = it->second.is_zero_poly() ? out.coefficients.erase(it) : std::next(it);
    return out;
}

/// Checks that every polarization coefficient of f lies in the Hilbert ideal
/// of the m-fold copies. The hypothesis f in I_A is verified first and its
/// failure is reported as an error, never as a false result. Pass the
/// already-computed Hilbert ideal of g as `hilbertIdealA` to skip a
/// recomputation.
template <typename K>
bool verify_polarization_lemma(const MatrixGroup<K>& g, int m, const Polynomial<K>& f,
                               const GroebnerBasis<K>& hilbertIdealB,
                               const GroebnerBasis<K>* hilbertIdealA = nullptr) {
    if (m < 1) throw std::invalid_argument("verify_polarization_lemma: copy count must be >= 1");
    if (f.is_zero_poly()) return true;
    GroebnerBasis<K> ideals;
    if (!hilbertIdealA) {
        ideals = hilbert_ideal(g).groebner;
        hilbertIdealA = &ideals;
    }
    if (!ideal_membership(f, *hilbertIdealA))
        throw std::invalid_argument(
            "verify_polarization_lemma: f is not in the Hilbert ideal of g");
    PolarizationResult<K> pol = polarize(f, m);
    for (const auto& [index, coeff] : pol.coefficients) {
        check_same_ring(coeff.ring, hilbertIdealB.ring);
        if (!ideal_membership(coeff, hilbertIdealB)) return false;
    }
    return true;
}

/// Pure-power top-degree report: when the lead term ideal of the Hilbert
/// ideal consists of pure variable powers x_i^{a_i} (all a_i below the
/// characteristic if it is positive), the top degree of the m-copy
/// coinvariants is sum (a_i - 1), independent of m.
struct PurePowerReport {
    bool applicable = false;
    std::vector<int> exponents;
    int predicted = -1;
    int measured = -1;
    bool match = false;
};

template <typename K>
PurePowerReport pure_power_topdeg_check(const MatrixGroup<K>& g, int m,
                                        long long maxDegreeCap = -1) {
    PurePowerReport report;
    HilbertIdealResult<K> ideal = hilbert_ideal(g, maxDegreeCap, MonomialOrder::lex());
    LeadTermIdeal lti = lead_term_ideal(ideal.groebner);
    const auto n = static_cast<size_t>(g.dimension);
    std::vector<int> exps(n, 0);
    for (const auto& gen : lti.generators) {
        size_t var = 0;
        if (!gen.is_pure_power(&var)) return report;  // mixed generator: hypothesis fails
        exps[var] = gen.exps[var];
    }
    for (size_t i = 0; i < n; ++i)
        if (exps[i] == 0) return report;  // cannot happen for a zero-dimensional ideal
    if (g.field.characteristic > 0)
        for (int a : exps)
            if (a >= g.field.characteristic) return report;

    report.applicable = true;
    report.exponents = exps;
    report.predicted = 0;
    for (int a : exps) report.predicted += a - 1;
    MatrixGroup<K> copies = vector_copies(g, m);
    CoinvariantSummary summary = coinvariant_summary(copies, maxDegreeCap);
    report.measured = summary.topDegree;
    report.match = report.measured == report.predicted;
    return report;
}

}  // namespace coinv

#endif  // COINV_POLARIZATION_HPP
