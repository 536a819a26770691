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

#ifndef COINV_INVARIANTS_HPP
#define COINV_INVARIANTS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "coinv/groebner.hpp"
#include "coinv/matrix_group.hpp"
#include "coinv/rep_builders.hpp"

namespace coinv {

/// The degree-d graded piece of the invariant ring, as an echelonized basis.
/// markers[i] is the unique monomial whose coefficient is 1 in basis[i] and 0
/// in every other basis element, so coordinates of any degree-d invariant can
/// be read off marker coefficients directly.
template <typename K>
struct InvariantSpace {
    int degree = 0;
    std::vector<Polynomial<K>> basis;
    std::vector<Monomial> markers;
};

/// Sum of f over the whole group orbit of translates. Always invariant; in
/// the modular case it can vanish (the transfer of 1 is |G| = 0).
template <typename K>
Polynomial<K> transfer(const Polynomial<K>& f, const MatrixGroup<K>& g) {
    if (f.ring.nvars != static_cast<size_t>(g.dimension))
        throw std::invalid_argument("transfer: variable count does not match the group dimension");
    Polynomial<K> acc(f.ring);
    for (const auto& m : g.elements) acc = acc + act(m, f);
    return acc;
}

template <typename K>
bool is_modular(const MatrixGroup<K>& g) {
    return g.field.characteristic != 0 &&
           static_cast<long long>(g.order()) % g.field.characteristic == 0;
}

/// Transfer normalized by |G|: the idempotent projection onto invariants.
/// Defined only away from the modular case.
template <typename K>
Polynomial<K> reynolds(const Polynomial<K>& f, const MatrixGroup<K>& g) {
    if (is_modular(g))
        throw std::domain_error("reynolds: |G| is divisible by the characteristic (modular case)");
    K scale = field_element<K>(f.ring.field, static_cast<long long>(g.order())).inverse();
    return transfer(f, g) * scale;
}

/// True when every column holds exactly one nonzero entry. Monomial matrices
/// send monomials to scalar multiples of monomials, which unlocks the orbit
/// fast path in invariant_basis.
template <typename K>
bool is_monomial_matrix(const DenseMatrix<K>& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        int nonzero = 0;
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (!is_zero(m(r, c))) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

namespace detail {

/// Monomial generator as a permutation-with-scales: column j holds scale[j]
/// at row rowOf[j].
template <typename K>
struct MonomialGen {
    std::vector<size_t> rowOf;
    std::vector<K> scale;
};

template <typename K>
MonomialGen<K> monomial_gen_data(const DenseMatrix<K>& m) {
    MonomialGen<K> out;
    out.rowOf.resize(static_cast<size_t>(m.cols()));
    out.scale.resize(static_cast<size_t>(m.cols()));
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (!is_zero(m(r, c))) {
                out.rowOf[static_cast<size_t>(c)] = static_cast<size_t>(r);
                out.scale[static_cast<size_t>(c)] = m(r, c);
                break;
            }
        }
    }
    return out;
}

template <typename K>
K scalar_power(K base, int32_t e, const FieldSpec& field) {
    K acc = field_one<K>(field);
    for (int32_t i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

/// Index lookup in a canonically descending monomial list.
inline size_t monomial_index(const std::vector<Monomial>& mons, const Monomial& m) {
    auto it = std::lower_bound(mons.begin(), mons.end(), m, CanonicalTermDesc{});
    if (it == mons.end() || !(*it == m)) throw std::logic_error("monomial_index: not in list");
    return static_cast<size_t>(it - mons.begin());
}

/// Orbit fast path: each generator permutes the degree-d monomials up to a
/// scalar. An orbit carries an invariant iff coefficient propagation around
/// every edge is consistent; the orbit root (its largest monomial) gets
/// coefficient 1 and serves as the marker.
template <typename K>
InvariantSpace<K> invariant_basis_monomial(const std::vector<DenseMatrix<K>>& gens, int d,
                                           const PolyRing& ring,
                                           const std::vector<Monomial>& mons) {
    const size_t n = ring.nvars;
    const size_t N = mons.size();
    std::vector<MonomialGen<K>> data;
    data.reserve(gens.size());
    for (const auto& m : gens) data.push_back(monomial_gen_data(m));

    // edge (k, gen i) -> (target index, scalar)
    auto edge = [&](size_t k, const MonomialGen<K>& gd) -> std::pair<size_t, K> {
        const Monomial& a = mons[k];
        Monomial b(n);
        K s = field_one<K>(ring.field);
        for (size_t j = 0; j < n; ++j) {
            if (a.exps[j] == 0) continue;
            b.exps[gd.rowOf[j]] += a.exps[j];
            s = s * scalar_power(gd.scale[j], a.exps[j], ring.field);
        }
        return {monomial_index(mons, b), s};
    };

    InvariantSpace<K> out;
    out.degree = d;
    std::vector<int> state(N, 0);  // 0 unvisited, 1 visited
    std::vector<K> lambda(N, field_zero<K>(ring.field));
    for (size_t root = 0; root < N; ++root) {
        if (state[root]) continue;
        std::vector<size_t> orbit;
        std::deque<size_t> queue{root};
        state[root] = 1;
        lambda[root] = field_one<K>(ring.field);
        bool consistent = true;
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            orbit.push_back(u);
            for (const auto& gd : data) {
                auto [v, s] = edge(u, gd);
                K required = lambda[u] * s;
                if (!state[v]) {
                    state[v] = 1;
                    lambda[v] = required;
                    queue.push_back(v);
                } else if (!(lambda[v] == required)) {
                    consistent = false;
                }
            }
        }
        if (!consistent) continue;
        Polynomial<K> f(ring);
        for (size_t u : orbit) f.add_term(mons[u], lambda[u]);
        out.basis.push_back(std::move(f));
        out.markers.push_back(mons[root]);
    }
    return out;
}

/// Dense path: nullspace of the stacked (action - identity) maps on the
/// degree-d monomial space. The standard-form nullspace is already reduced,
/// with the free-column monomials as markers.
template <typename K>
InvariantSpace<K> invariant_basis_dense(const std::vector<DenseMatrix<K>>& gens, int d,
                                        const PolyRing& ring, const std::vector<Monomial>& mons) {
    const size_t n = ring.nvars;
    const auto N = static_cast<Eigen::Index>(mons.size());
    const auto G = static_cast<Eigen::Index>(gens.size());
    DenseMatrix<K> stacked = zero_matrix<K>(ring.field, G * N, N);
    for (Eigen::Index gi = 0; gi < G; ++gi) {
        const DenseMatrix<K>& m = gens[static_cast<size_t>(gi)];
        // variable images and their powers, cached across all monomials
        std::vector<Polynomial<K>> images;
        std::vector<std::vector<Polynomial<K>>> powers(n);
        for (size_t j = 0; j < n; ++j) {
            Polynomial<K> img(ring);
            for (Eigen::Index k = 0; k < m.rows(); ++k)
                img.add_term(Monomial::variable(n, static_cast<size_t>(k)),
                             m(k, static_cast<Eigen::Index>(j)));
            images.push_back(std::move(img));
            powers[j].push_back(Polynomial<K>::constant(ring, 1));
        }
        auto power = [&](size_t j, int32_t e) -> const Polynomial<K>& {
            auto& cache = powers[j];
            while (static_cast<int32_t>(cache.size()) <= e)
                cache.push_back(cache.back() * images[j]);
            return cache[static_cast<size_t>(e)];
        };
        for (Eigen::Index c = 0; c < N; ++c) {
            const Monomial& a = mons[static_cast<size_t>(c)];
            Polynomial<K> image = Polynomial<K>::constant(ring, 1);
            for (size_t j = 0; j < n; ++j)
                if (a.exps[j] > 0) image = image * power(j, a.exps[j]);
            for (const auto& [mono, coeff] : image.terms) {
                auto r = static_cast<Eigen::Index>(monomial_index(mons, mono));
                stacked(gi * N + r, c) = stacked(gi * N + r, c) + coeff;
            }
            stacked(gi * N + c, c) = stacked(gi * N + c, c) - field_one<K>(ring.field);
        }
    }
    std::vector<Eigen::Index> freeCols;
    DenseMatrix<K> basis = nullspace(stacked, ring.field, &freeCols);

    InvariantSpace<K> out;
    out.degree = d;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        Polynomial<K> f(ring);
        for (Eigen::Index r = 0; r < basis.rows(); ++r)
            f.add_term(mons[static_cast<size_t>(r)], basis(r, k));
        out.basis.push_back(std::move(f));
        out.markers.push_back(mons[static_cast<size_t>(freeCols[static_cast<size_t>(k)])]);
    }
    return out;
}

}  // namespace detail

/// Basis of the degree-d invariants, echelonized and deterministic.
/// Invariance is imposed against the generators only; elements fixed by all
/// generators are fixed by the group they generate.
template <typename K>
InvariantSpace<K> invariant_basis(const MatrixGroup<K>& g, int d) {
    if (d < 1) throw std::invalid_argument("invariant_basis: degree must be >= 1");
    PolyRing ring = ring_of(g);
    std::vector<Monomial> mons = monomials_of_degree(ring.nvars, d);
    std::vector<DenseMatrix<K>> gens = generator_matrices(g);
    bool allMonomial = true;
    for (const auto& m : gens)
        if (!is_monomial_matrix(m)) {
            allMonomial = false;
            break;
        }
    if (allMonomial) return detail::invariant_basis_monomial(gens, d, ring, mons);
    return detail::invariant_basis_dense(gens, d, ring, mons);
}

/// The Hilbert ideal (all positive-degree invariants) as a reduced Groebner
/// basis, with the degrees of the invariant generators that were needed and
/// the degree at which the loop provably terminated.
template <typename K>
struct HilbertIdealResult {
    GroebnerBasis<K> groebner;
    std::vector<int> generatorDegrees;
    int cutoffDegree = 0;
    std::vector<Polynomial<K>> generators;
};

template <typename K>
long long default_degree_cap(const MatrixGroup<K>& g) {
    return static_cast<long long>(g.order()) * static_cast<long long>(g.dimension);
}

/// Degree-by-degree construction. At each degree the new invariants are
/// folded into the basis; the loop stops at the first degree d where the
/// current quotient is zero-dimensional with top degree t and d >= t + 1.
/// The partial ideal sits inside the full one, so its top degree can only
/// overestimate; once d passes it, every generator of the full ideal (they
/// live in degrees <= topdeg + 1) has been seen.
template <typename K>
HilbertIdealResult<K> hilbert_ideal(const MatrixGroup<K>& g, long long maxDegreeCap = -1,
                                    const MonomialOrder& order = MonomialOrder::lex()) {
    if (maxDegreeCap < 0) maxDegreeCap = default_degree_cap(g);
    if (maxDegreeCap < 1) throw std::invalid_argument("hilbert_ideal: cap must be >= 1");
    HilbertIdealResult<K> result;
    result.groebner = GroebnerBasis<K>{ring_of(g), order, {}};
    for (long long d = 1; d <= maxDegreeCap; ++d) {
        InvariantSpace<K> space = invariant_basis(g, static_cast<int>(d));
        for (const auto& f : space.basis) {
            if (!result.groebner.basis.empty() && normal_form(f, result.groebner).is_zero_poly())
                continue;
            result.groebner = buchberger_extend(result.groebner, {f});
            result.generatorDegrees.push_back(static_cast<int>(d));
            result.generators.push_back(f);
        }
        CoinvariantSummary summary = quotient_summary(result.groebner);
        if (summary.finiteDimensional && d >= summary.topDegree + 1) {
            result.cutoffDegree = static_cast<int>(d);
            return result;
        }
    }
    std::string partial;
    for (int deg : result.generatorDegrees) partial += std::to_string(deg) + " ";
    throw std::runtime_error("hilbert_ideal: degree cap " + std::to_string(maxDegreeCap) +
                             " exceeded before the quotient became zero-dimensional; partial "
                             "generator degrees: [ " +
                             partial + "]");
}

template <typename K>
CoinvariantSummary coinvariant_summary(const MatrixGroup<K>& g, long long maxDegreeCap = -1,
                                       const MonomialOrder& order = MonomialOrder::lex()) {
    return quotient_summary(hilbert_ideal(g, maxDegreeCap, order).groebner);
}

/// Degrees of a minimal homogeneous generating set of the invariant ring up
/// to the bound. Non-modular runs default the bound to |G|, which is safe;
/// modular runs have no a-priori bound, so the result is flagged as valid
/// only relative to the bound used.
struct MinimalGenerators {
    std::vector<int> degrees;
    int degreeBound = 0;
    bool boundRelative = false;
};

template <typename K>
MinimalGenerators minimal_generators(const MatrixGroup<K>& g, int degreeBound = -1) {
    MinimalGenerators out;
    out.boundRelative = is_modular(g);
    if (degreeBound <= 0)
        degreeBound = out.boundRelative ? static_cast<int>(default_degree_cap(g))
                                        : static_cast<int>(g.order());
    out.degreeBound = degreeBound;

    // Representatives found so far, and every product of representatives
    // (monomials in the generators) stored by degree as coordinate vectors
    // over that degree's invariant basis. Products with >= 2 factors span
    // exactly the decomposable invariants, by induction on degree.
    struct Product {
        DenseVector<K> coords;
        size_t lastRep;
    };
    std::vector<std::pair<int, Polynomial<K>>> reps;  // (degree, polynomial)
    std::map<int, InvariantSpace<K>> spaces;
    std::map<int, std::vector<Product>> products;

    auto coords_of = [&](const Polynomial<K>& f, const InvariantSpace<K>& space) {
        DenseVector<K> v(static_cast<Eigen::Index>(space.markers.size()));
        for (size_t i = 0; i < space.markers.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = f.coefficient(space.markers[i]);
        return v;
    };
    auto poly_of = [&](const Product& q, const InvariantSpace<K>& space) {
        Polynomial<K> f(ring_of(g));
        for (size_t i = 0; i < space.basis.size(); ++i) {
            const K& c = q.coords(static_cast<Eigen::Index>(i));
            if (!is_zero(c)) f = f + space.basis[i] * c;
        }
        return f;
    };

    for (int d = 1; d <= degreeBound; ++d) {
        InvariantSpace<K> space = invariant_basis(g, d);
        const auto dim = static_cast<Eigen::Index>(space.basis.size());
        std::vector<Product> productsHere;
        EchelonRowSpace<K> span(g.field, dim);
        if (dim > 0) {
            for (size_t i = 0; i < reps.size(); ++i) {
                int k = reps[i].first;
                if (k >= d) continue;
                auto it = products.find(d - k);
                if (it == products.end()) continue;
                for (const Product& q : it->second) {
                    if (q.lastRep > i) continue;
                    Polynomial<K> p = poly_of(q, spaces.at(d - k)) * reps[i].second;
                    Product np{coords_of(p, space), i};
                    if (span.rank() < dim) span.insert(np.coords);
                    productsHere.push_back(std::move(np));
                }
            }
        }
        // basis vectors outside the decomposable span are new generators
        for (Eigen::Index i = 0; i < dim; ++i) {
            DenseVector<K> unit = zero_matrix<K>(g.field, dim, 1).col(0);
            unit(i) = field_one<K>(g.field);
            if (!span.insert(unit)) continue;
            out.degrees.push_back(d);
            size_t repIdx = reps.size();
            reps.emplace_back(d, space.basis[static_cast<size_t>(i)]);
            DenseVector<K> selfCoords = zero_matrix<K>(g.field, dim, 1).col(0);
            selfCoords(i) = field_one<K>(g.field);
            productsHere.push_back(Product{std::move(selfCoords), repIdx});
        }
        products.emplace(d, std::move(productsHere));
        spaces.emplace(d, std::move(space));
    }
    return out;
}

template <typename K>
int noether_number(const MatrixGroup<K>& g, int degreeBound = -1) {
    MinimalGenerators mg = minimal_generators(g, degreeBound);
    int best = 0;
    for (int d : mg.degrees) best = std::max(best, d);
    return best;
}

/// The invariant ring is polynomial iff a minimal generating set has exactly
/// dim V elements: n generators of a ring of Krull dimension n must be
/// algebraically independent.
template <typename K>
bool is_polynomial(const MatrixGroup<K>& g, int degreeBound = -1) {
    return minimal_generators(g, degreeBound).degrees.size() == static_cast<size_t>(g.dimension);
}

struct SteinbergReport {
    long long coinvariantDim = 0;
    long long groupOrder = 0;
    int minimalGeneratorCount = 0;
    bool isPolynomial = false;
    bool consistent = false;
};

/// dim F[V]_G against |G|, with the polynomiality criterion: the two agree
/// exactly when the invariant ring is polynomial.
template <typename K>
SteinbergReport steinberg_check(const MatrixGroup<K>& g, long long maxDegreeCap = -1) {
    SteinbergReport report;
    CoinvariantSummary summary = coinvariant_summary(g, maxDegreeCap);
    MinimalGenerators mg = minimal_generators(g);
    report.coinvariantDim = summary.dimension;
    report.groupOrder = static_cast<long long>(g.order());
    report.minimalGeneratorCount = static_cast<int>(mg.degrees.size());
    report.isPolynomial = mg.degrees.size() == static_cast<size_t>(g.dimension);
    report.consistent = ((report.coinvariantDim == report.groupOrder) == report.isPolynomial);
    return report;
}

}  // namespace coinv

#endif  // COINV_INVARIANTS_HPP
