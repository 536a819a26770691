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

#ifndef COINV_REP_BUILDERS_HPP
#define COINV_REP_BUILDERS_HPP

#include <vector>

#include "coinv/matrix_group.hpp"

namespace coinv {

/// The trivial group acting on an n-dimensional space.
template <typename K>
MatrixGroup<K> trivial_rep(const FieldSpec& field, Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("trivial_rep: dimension must be positive");
    MatrixGroup<K> g;
    g.field = field;
    g.dimension = n;
    g.elements.push_back(identity_matrix<K>(field, n));
    g.generatorIndices.push_back(0);
    return g;
}

/// Permutation matrix: column j carries e_{images[j]}.
template <typename K>
DenseMatrix<K> permutation_matrix(const FieldSpec& field, const std::vector<size_t>& images) {
    const auto n = static_cast<Eigen::Index>(images.size());
    DenseMatrix<K> m = zero_matrix<K>(field, n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (images[static_cast<size_t>(j)] >= static_cast<size_t>(n))
            throw std::invalid_argument("permutation_matrix: image out of range");
        m(static_cast<Eigen::Index>(images[static_cast<size_t>(j)]), j) = field_one<K>(field);
    }
    return m;
}

/// S_n by permutation matrices, generated by the adjacent transpositions.
template <typename K>
MatrixGroup<K> symmetric_rep(const FieldSpec& field, Eigen::Index n,
                             long long cap = kDefaultClosureCap) {
    if (n < 1) throw std::invalid_argument("symmetric_rep: n must be positive");
    if (n == 1) return trivial_rep<K>(field, 1);
    std::vector<DenseMatrix<K>> gens;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        std::vector<size_t> images(static_cast<size_t>(n));
        for (size_t j = 0; j < images.size(); ++j) images[j] = j;
        std::swap(images[static_cast<size_t>(i)], images[static_cast<size_t>(i) + 1]);
        gens.push_back(permutation_matrix<K>(field, images));
    }
    return close_group(gens, field, cap);
}

/// Z_n acting by the n-cycle permutation matrix (its own regular representation).
template <typename K>
MatrixGroup<K> cyclic_permutation_rep(const FieldSpec& field, Eigen::Index n,
                                      long long cap = kDefaultClosureCap) {
    if (n < 1) throw std::invalid_argument("cyclic_permutation_rep: n must be positive");
    if (n == 1) return trivial_rep<K>(field, 1);
    std::vector<size_t> images(static_cast<size_t>(n));
    for (size_t j = 0; j < images.size(); ++j) images[j] = (j + 1) % images.size();
    return close_group(std::vector<DenseMatrix<K>>{permutation_matrix<K>(field, images)}, field, cap);
}

/// Z_p acting by a single unipotent upper-triangular Jordan block of size k.
/// Requires k <= p so the block has order p (order 1 when k = 1).
inline MatrixGroup<Fp> jordan_rep(long long p, Eigen::Index k, long long cap = kDefaultClosureCap) {
    FieldSpec field = FieldSpec::prime(p);
    if (k < 1) throw std::invalid_argument("jordan_rep: block size must be positive");
    if (k > p)
        throw std::invalid_argument("jordan_rep: block size " + std::to_string(k) +
                                    " exceeds the characteristic " + std::to_string(p));
    DenseMatrix<Fp> j = identity_matrix<Fp>(field, k);
    for (Eigen::Index i = 0; i + 1 < k; ++i) j(i, i + 1) = field_one<Fp>(field);
    return close_group(std::vector<DenseMatrix<Fp>>{j}, field, cap);
}

/// Abelian group Z_{orders[0]} x ... x Z_{orders[r-1]} acting diagonally.
/// weights[t] lists, per factor, the character exponent of variable t: the
/// i-th generator scales x_t by zeta_{orders[i]} ^ weights[t][i]. The field
/// must contain a primitive root of unity for every factor order, which over
/// a prime field also keeps the action non-modular.
template <typename K>
MatrixGroup<K> diagonal_rep(const FieldSpec& field, const std::vector<long long>& orders,
                            const std::vector<std::vector<long long>>& weights,
                            long long cap = kDefaultClosureCap) {
    const size_t r = orders.size();
    const auto n = static_cast<Eigen::Index>(weights.size());
    if (n < 1) throw std::invalid_argument("diagonal_rep: at least one variable required");
    for (const auto& w : weights)
        if (w.size() != r) throw std::invalid_argument("diagonal_rep: weight vector length mismatch");
    for (long long a : orders)
        if (a < 1) throw std::invalid_argument("diagonal_rep: factor orders must be positive");
    if (r == 0) return trivial_rep<K>(field, n);

    std::vector<DenseMatrix<K>> gens;
    for (size_t i = 0; i < r; ++i) {
        K zeta = root_of_unity<K>(field, orders[i]);
        DenseMatrix<K> g = identity_matrix<K>(field, n);
        for (Eigen::Index t = 0; t < n; ++t) {
            long long e = weights[static_cast<size_t>(t)][i] % orders[i];
            if (e < 0) e += orders[i];
            K v = field_one<K>(field);
            for (long long s = 0; s < e; ++s) v = v * zeta;
            g(t, t) = v;
        }
        gens.push_back(std::move(g));
    }
    return close_group(gens, field, cap);
}

/// diagonal_rep with the identity character matrix: one variable per factor,
/// the i-th generator scaling exactly x_i.
template <typename K>
MatrixGroup<K> diagonal_rep(const FieldSpec& field, const std::vector<long long>& orders,
                            long long cap = kDefaultClosureCap) {
    std::vector<std::vector<long long>> weights(orders.size(),
                                                std::vector<long long>(orders.size(), 0));
    for (size_t i = 0; i < orders.size(); ++i) weights[i][i] = 1;
    if (orders.empty()) throw std::invalid_argument("diagonal_rep: no factors");
    return diagonal_rep<K>(field, orders, weights, cap);
}

/// The order-2 group {I, -I} on n variables (trivial in characteristic 2).
template <typename K>
MatrixGroup<K> neg_identity_rep(const FieldSpec& field, Eigen::Index n,
                                long long cap = kDefaultClosureCap) {
    if (n < 1) throw std::invalid_argument("neg_identity_rep: dimension must be positive");
    K minusOne = field_zero<K>(field) - field_one<K>(field);
    DenseMatrix<K> g = identity_matrix<K>(field, n);
    for (Eigen::Index i = 0; i < n; ++i) g(i, i) = minusOne;
    return close_group(std::vector<DenseMatrix<K>>{g}, field, cap);
}

/// Left-regular permutation representation of the abstract group behind
/// `base`: dimension |G|, sigma sending e_j to e_{sigma g_j}. Only the
/// multiplication table of `base` is used, so the target field is free.
template <typename BaseK, typename K>
MatrixGroup<K> regular_rep(const FieldSpec& field, const MatrixGroup<BaseK>& base,
                           long long cap = kDefaultClosureCap) {
    const size_t N = base.order();
    if (N == 1) return trivial_rep<K>(field, 1);
    auto table = multiplication_table(base);
    std::vector<DenseMatrix<K>> gens;
    for (size_t s : base.generatorIndices) {
        std::vector<size_t> images(N);
        for (size_t j = 0; j < N; ++j) images[j] = table[s][j];
        gens.push_back(permutation_matrix<K>(field, images));
    }
    return close_group(gens, field, cap);
}

/// m-fold vector copies V^m: each element becomes M (x) I_m, acting the same
/// way on every copy. Variable (i, j) (source variable i, copy j) sits at
/// index i*m + j, so identity-priority lex orders first by source variable,
/// then by copy.
template <typename K>
MatrixGroup<K> vector_copies(const MatrixGroup<K>& group, Eigen::Index m) {
    if (m < 1) throw std::invalid_argument("vector_copies: m must be positive");
    if (m == 1) return group;
    DenseMatrix<K> eye = identity_matrix<K>(group.field, m);
    MatrixGroup<K> out;
    out.field = group.field;
    out.dimension = group.dimension * m;
    out.elements.reserve(group.elements.size());
    for (const auto& e : group.elements) out.elements.push_back(kronecker(e, eye, group.field));
    out.generatorIndices = group.generatorIndices;
    return out;
}

template <typename K>
DenseMatrix<K> block_diag(const DenseMatrix<K>& a, const DenseMatrix<K>& b, const FieldSpec& field) {
    DenseMatrix<K> out = zero_matrix<K>(field, a.rows() + b.rows(), a.cols() + b.cols());
    out.block(0, 0, a.rows(), a.cols()) = a;
    out.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
    return out;
}

/// Direct sum of representations of one abstract group, presented by
/// generator lists of equal length: the i-th generators of all summands are
/// stacked block-diagonally and the result is closed.
template <typename K>
MatrixGroup<K> direct_sum_rep(const FieldSpec& field,
                              const std::vector<std::vector<DenseMatrix<K>>>& summandGens,
                              long long cap = kDefaultClosureCap) {
    if (summandGens.empty()) throw std::invalid_argument("direct_sum_rep: no summands");
    const size_t L = summandGens.front().size();
    if (L == 0) throw std::invalid_argument("direct_sum_rep: summand has no generators");
    for (const auto& gens : summandGens)
        if (gens.size() != L)
            throw std::invalid_argument(
                "direct_sum_rep: summands must present the same generator count");
    std::vector<DenseMatrix<K>> gens;
    for (size_t i = 0; i < L; ++i) {
        DenseMatrix<K> g = summandGens[0][i];
        for (size_t s = 1; s < summandGens.size(); ++s)
            g = block_diag(g, summandGens[s][i], field);
        gens.push_back(std::move(g));
    }
    return close_group(gens, field, cap);
}

/// Generator matrices of a group, in generator order.
template <typename K>
std::vector<DenseMatrix<K>> generator_matrices(const MatrixGroup<K>& group) {
    std::vector<DenseMatrix<K>> out;
    out.reserve(group.generatorIndices.size());
    for (size_t i : group.generatorIndices) out.push_back(group.elements[i]);
    return out;
}

/// Subgroup generated by a subset of element indices.
template <typename K>
MatrixGroup<K> subgroup_generated(const MatrixGroup<K>& group, const std::vector<size_t>& indices,
                                  long long cap = kDefaultClosureCap) {
    if (indices.empty()) return trivial_rep<K>(group.field, group.dimension);
    std::vector<DenseMatrix<K>> gens;
    for (size_t i : indices) gens.push_back(group.elements.at(i));
    return close_group(gens, group.field, cap);
}

}  // namespace coinv

#endif  // COINV_REP_BUILDERS_HPP
