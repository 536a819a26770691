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

#ifndef COINV_GROEBNER_HPP
#define COINV_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "coinv/polynomial.hpp"

namespace coinv {

/// Reduced Groebner basis: every element monic, no term of any element
/// divisible by the lead term of another, elements sorted descending by lead
/// term. A reduced basis is unique for its ideal and order, which makes
/// reruns byte-stable.
template <typename K>
struct GroebnerBasis {
    PolyRing ring;
    MonomialOrder order;
    std::vector<Polynomial<K>> basis;
};

/// Minimal monomial generators of a monomial ideal: an antichain under
/// divisibility, kept in ascending canonical order.
struct LeadTermIdeal {
    std::vector<Monomial> generators;

    bool contains(const Monomial& m) const {
        for (const auto& g : generators)
            if (g.divides(m)) return true;
        return false;
    }
    bool operator==(const LeadTermIdeal&) const = default;
};

/// Drops every monomial divisible by another and sorts canonically.
inline LeadTermIdeal minimal_antichain(std::vector<Monomial> mons) {
    std::sort(mons.begin(), mons.end(), CanonicalTermAsc{});
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    std::vector<Monomial> keep;
    for (size_t i = 0; i < mons.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < mons.size() && !redundant; ++j)
            if (j != i && mons[j].divides(mons[i]) && !(mons[i] == mons[j] && j > i))
                redundant = true;
        if (!redundant) keep.push_back(mons[i]);
    }
    return LeadTermIdeal{std::move(keep)};
}

/// Dimension, top degree and Hilbert series of a quotient by a monomial
/// ideal. When some variable has no pure power among the generators the
/// quotient is infinite-dimensional: finiteDimensional is false and the
/// numeric fields are not meaningful.
struct CoinvariantSummary {
    bool finiteDimensional = false;
    long long dimension = -1;
    int topDegree = -1;
    std::vector<long long> hilbertSeries;

    bool operator==(const CoinvariantSummary&) const = default;
};

namespace detail {

/// Multivariate division. Appends the remainder's terms and, when asked,
/// tracks the quotient against each divisor so callers can rebuild
/// f = sum q_i g_i + r.
template <typename K>
Polynomial<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                     const MonomialOrder& order, std::vector<Polynomial<K>>* quotients) {
    for (const auto& g : divisors) {
        check_same_ring(f.ring, g.ring);
        if (g.is_zero_poly()) throw std::invalid_argument("divide: zero divisor polynomial");
    }
    if (quotients) quotients->assign(divisors.size(), Polynomial<K>::zero(f.ring));
    std::vector<std::pair<Monomial, K>> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) leads.push_back(g.lead_term(order));

    Polynomial<K> work = f;
    Polynomial<K> remainder(f.ring);
    K negOne = field_zero<K>(f.ring.field) - field_one<K>(f.ring.field);
    while (!work.is_zero_poly()) {
        auto [m, c] = work.lead_term(order);
        bool divided = false;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (!leads[i].first.divides(m)) continue;
            Monomial q = m / leads[i].first;
            K coef = c / leads[i].second;
            work.add_scaled(q, coef * negOne, divisors[i]);
            if (quotients) (*quotients)[i].add_term(q, coef);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(m, c);
            work.add_term(m, c * negOne);
        }
    }
    return remainder;
}

}  // namespace detail

/// Remainder of f on division by the given polynomials. No term of the result
/// is divisible by any divisor's lead term, and f minus the result lies in
/// the ideal the divisors generate.
template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                          const MonomialOrder& order) {
    return detail::divide(f, basis, order, static_cast<std::vector<Polynomial<K>>*>(nullptr));
}

template <typename K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    return detail::divide(f, gb.basis, gb.order, static_cast<std::vector<Polynomial<K>>*>(nullptr));
}

/// Division with the quotient combination: returns (remainder, quotients)
/// with f = sum quotients[i] * basis[i] + remainder.
template <typename K>
std::pair<Polynomial<K>, std::vector<Polynomial<K>>> normal_form_with_quotients(
    const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis, const MonomialOrder& order) {
    std::vector<Polynomial<K>> quotients;
    Polynomial<K> r = detail::divide(f, basis, order, &quotients);
    return {std::move(r), std::move(quotients)};
}

namespace detail {

template <typename K>
struct BuchbergerState {
    PolyRing ring;
    MonomialOrder order;
    std::vector<Polynomial<K>> gens;   // monic, nonzero
    std::vector<Monomial> leads;

    struct Pair {
        size_t i, j;
        Monomial lcm;
        int degree;
    };
    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> pendingKeys;

    explicit BuchbergerState(PolyRing r, MonomialOrder o) : ring(std::move(r)), order(std::move(o)) {}

    void add_generator(const Polynomial<K>& g, bool pairWithExisting) {
        Polynomial<K> monic = g.monic(order);
        size_t idx = gens.size();
        Monomial lead = monic.lead_monomial(order);
        gens.push_back(std::move(monic));
        leads.push_back(lead);
        if (!pairWithExisting) return;
        for (size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }

    void push_pair(size_t i, size_t j) {
        Monomial l = Monomial::lcm(leads[i], leads[j]);
        pending.push_back({i, j, l, l.degree()});
        pendingKeys.insert({i, j});
    }

    /// Normal selection: lowest lcm degree first; ties broken by the canonical
    /// monomial order on the lcm, then by index, so runs are deterministic.
    size_t select() const {
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair& a = pending[k];
            const Pair& b = pending[best];
            if (a.degree != b.degree) {
                if (a.degree < b.degree) best = k;
                continue;
            }
            int cmp = canonical_compare(a.lcm, b.lcm);
            if (cmp != 0) {
                if (cmp < 0) best = k;
                continue;
            }
            if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
        }
        return best;
    }

    bool chain_criterion(const Pair& p) const {
        for (size_t k = 0; k < gens.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!leads[k].divides(p.lcm)) continue;
            auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (pendingKeys.count(key(p.i, k)) == 0 && pendingKeys.count(key(p.j, k)) == 0)
                return true;
        }
        return false;
    }

    void run() {
        K negOne = field_zero<K>(ring.field) - field_one<K>(ring.field);
        while (!pending.empty()) {
            size_t idx = select();
            Pair p = pending[idx];
            pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
            pendingKeys.erase({p.i, p.j});
            if (Monomial::coprime(leads[p.i], leads[p.j])) continue;
            if (chain_criterion(p)) continue;
            // S-polynomial of two monic generators
            Polynomial<K> s = Polynomial<K>::zero(ring);
            s.add_scaled(p.lcm / leads[p.i], field_one<K>(ring.field), gens[p.i]);
            s.add_scaled(p.lcm / leads[p.j], negOne, gens[p.j]);
            Polynomial<K> r = divide(s, gens, order, static_cast<std::vector<Polynomial<K>>*>(nullptr));
            if (!r.is_zero_poly()) add_generator(r, /*pairWithExisting=*/true);
        }
    }

    /// Minimize and inter-reduce to the unique reduced basis.
    std::vector<Polynomial<K>> reduced() const {
        std::vector<size_t> keep;
        for (size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (size_t j : keep)
                if (leads[j].divides(leads[i])) { redundant = true; break; }
            if (redundant) continue;
            // drop previously kept elements whose lead this one divides
            std::vector<size_t> next;
            for (size_t j : keep)
                if (!leads[i].divides(leads[j])) next.push_back(j);
            next.push_back(i);
            keep = std::move(next);
        }
        std::vector<Polynomial<K>> out;
        out.reserve(keep.size());
        for (size_t i : keep) out.push_back(gens[i]);
        // inter-reduce: replace each element by its normal form against the rest
        for (size_t i = 0; i < out.size(); ++i) {
            std::vector<Polynomial<K>> others;
            for (size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            Polynomial<K> r = others.empty() ? out[i] : divide(out[i], others, order, static_cast<std::vector<Polynomial<K>>*>(nullptr));
            out[i] = r.monic(order);
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
            return order.greater(a.lead_monomial(order), b.lead_monomial(order));
        });
        return out;
    }
};

}  // namespace detail

/// Reduced Groebner basis of the ideal the generators span. Empty input (or
/// all-zero input) yields an empty basis.
template <typename K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& generators,
                            const MonomialOrder& order) {
    if (generators.empty()) return GroebnerBasis<K>{PolyRing{}, order, {}};
    PolyRing ring = generators.front().ring;
    detail::BuchbergerState<K> st(ring, order);
    for (const auto& g : generators) {
        check_same_ring(g.ring, ring);
        if (!g.is_zero_poly()) st.add_generator(g, /*pairWithExisting=*/true);
    }
    st.run();
    return GroebnerBasis<K>{ring, order, st.reduced()};
}

/// Extends a reduced basis by new generators. Pairs internal to the old basis
/// are skipped: their S-polynomials already reduce to zero.
template <typename K>
GroebnerBasis<K> buchberger_extend(const GroebnerBasis<K>& gb,
                                   const std::vector<Polynomial<K>>& extra) {
    if (gb.basis.empty()) return buchberger(extra, gb.order);
    detail::BuchbergerState<K> st(gb.ring, gb.order);
    for (const auto& g : gb.basis) st.add_generator(g, /*pairWithExisting=*/false);
    for (const auto& g : extra) {
        check_same_ring(g.ring, gb.ring);
        if (!g.is_zero_poly()) st.add_generator(g, /*pairWithExisting=*/true);
    }
    st.run();
    return GroebnerBasis<K>{gb.ring, gb.order, st.reduced()};
}

template <typename K>
bool ideal_membership(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
    if (gb.basis.empty()) return f.is_zero_poly();
    return normal_form(f, gb).is_zero_poly();
}

template <typename K>
LeadTermIdeal lead_term_ideal(const GroebnerBasis<K>& gb) {
    std::vector<Monomial> leads;
    leads.reserve(gb.basis.size());
    for (const auto& g : gb.basis) leads.push_back(g.lead_monomial(gb.order));
    return minimal_antichain(std::move(leads));
}

/// Counts standard monomials (those outside the monomial ideal) degree by
/// degree. If some variable has no pure power among the generators the count
/// is infinite and only the flag is set. The walk visits the finite box
/// bounded by the minimal pure powers; divisibility against the antichain
/// filters the rest.
inline CoinvariantSummary quotient_summary(const LeadTermIdeal& lti, size_t numVariables) {
    CoinvariantSummary out;
    for (const auto& g : lti.generators) {
        if (g.is_one()) {  // unit ideal: the quotient is the zero ring
            out.finiteDimensional = true;
            out.dimension = 0;
            out.topDegree = -1;
            return out;
        }
    }
    std::vector<int32_t> bound(numVariables, -1);
    for (const auto& g : lti.generators) {
        size_t var = 0;
        if (g.is_pure_power(&var))
            if (bound[var] < 0 || g.exps[var] < bound[var]) bound[var] = g.exps[var];
    }
    for (size_t i = 0; i < numVariables; ++i)
        if (bound[i] < 0) return out;  // infinite-dimensional

    out.finiteDimensional = true;
    out.dimension = 0;
    std::vector<long long> series;
    Monomial m(numVariables);
    // odometer over the box prod [0, bound_i - 1]
    while (true) {
        if (!lti.contains(m)) {
            int d = m.degree();
            if (static_cast<size_t>(d) >= series.size()) series.resize(static_cast<size_t>(d) + 1, 0);
            ++series[static_cast<size_t>(d)];
            ++out.dimension;
        }
        size_t pos = 0;
        while (pos < numVariables) {
            if (++m.exps[pos] < bound[pos]) break;
            m.exps[pos] = 0;
            ++pos;
        }
        if (pos == numVariables) break;
    }
    while (!series.empty() && series.back() == 0) series.pop_back();
    out.hilbertSeries = std::move(series);
    out.topDegree = static_cast<int>(out.hilbertSeries.size()) - 1;
    return out;
}

template <typename K>
CoinvariantSummary quotient_summary(const GroebnerBasis<K>& gb) {
    return quotient_summary(lead_term_ideal(gb), gb.ring.nvars);
}

}  // namespace coinv

#endif  // COINV_GROEBNER_HPP
