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

#ifndef COINV_MATRIX_GROUP_HPP
#define COINV_MATRIX_GROUP_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coinv/linalg.hpp"
#include "coinv/polynomial.hpp"

namespace coinv {

/// A finite subgroup of GL_n(F) listed element by element. Closed under
/// products and inverses, identity first, ordering fixed by the BFS in
/// close_group so fixtures are stable.
template <typename K>
struct MatrixGroup {
    using Scalar = K;

    FieldSpec field;
    Eigen::Index dimension = 0;
    std::vector<DenseMatrix<K>> elements;
    std::vector<size_t> generatorIndices;

    size_t order() const { return elements.size(); }
    const DenseMatrix<K>& identity() const { return elements.front(); }
};

namespace detail {

inline void append_key(std::ostringstream& os, const Rational& x) { os << x.value() << ','; }
inline void append_key(std::ostringstream& os, const Fp& x) { os << x.residue() << ','; }

template <typename K>
std::string matrix_key(const DenseMatrix<K>& m) {
    std::ostringstream os;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) append_key(os, m(r, c));
    return os.str();
}

}  // namespace detail

inline constexpr long long kDefaultClosureCap = 10000;

/// Multiplicative closure of the generators: BFS from the identity, products
/// taken with generators in input order, which fixes the element ordering.
/// The closure of finitely many invertible matrices that stays below the cap
/// is automatically a group.
template <typename K>
MatrixGroup<K> close_group(const std::vector<DenseMatrix<K>>& generators, const FieldSpec& field,
                           long long cap = kDefaultClosureCap) {
    if (generators.empty())
        throw std::invalid_argument("close_group: no generators (use trivial_rep for the trivial group)");
    if (cap <= 0) throw std::invalid_argument("close_group: cap must be positive");
    const Eigen::Index n = generators.front().rows();
    for (const auto& g : generators) {
        if (g.rows() != g.cols()) throw std::invalid_argument("close_group: non-square generator");
        if (g.rows() != n) throw std::invalid_argument("close_group: generator sizes differ");
        if (!invert(g, field)) throw std::invalid_argument("close_group: singular generator");
    }

    MatrixGroup<K> group;
    group.field = field;
    group.dimension = n;
    std::map<std::string, size_t> seen;
    auto add = [&](const DenseMatrix<K>& m) -> std::pair<size_t, bool> {
        std::string key = detail::matrix_key(m);
        auto it = seen.find(key);
        if (it != seen.end()) return {it->second, false};
        size_t idx = group.elements.size();
        if (static_cast<long long>(idx) >= cap)
            throw std::runtime_error("close_group: closure exceeds cap of " + std::to_string(cap) +
                                     " elements");
        group.elements.push_back(m);
        seen.emplace(std::move(key), idx);
        return {idx, true};
    };

    add(identity_matrix<K>(field, n));
    for (size_t frontier = 0; frontier < group.elements.size(); ++frontier) {
        for (const auto& g : generators) {
            DenseMatrix<K> prod = group.elements[frontier] * g;
            add(prod);
        }
    }
    for (const auto& g : generators) group.generatorIndices.push_back(add(g).first);
    return group;
}

/// Index of a matrix in the element list, if present.
template <typename K>
std::optional<size_t> find_element(const MatrixGroup<K>& group, const DenseMatrix<K>& m) {
    std::string key = detail::matrix_key(m);
    for (size_t i = 0; i < group.elements.size(); ++i)
        if (detail::matrix_key(group.elements[i]) == key) return i;
    return std::nullopt;
}

/// table[i][j] = index of elements[i] * elements[j].
template <typename K>
std::vector<std::vector<size_t>> multiplication_table(const MatrixGroup<K>& group) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < group.elements.size(); ++i)
        index.emplace(detail::matrix_key(group.elements[i]), i);
    std::vector<std::vector<size_t>> table(group.order(), std::vector<size_t>(group.order()));
    for (size_t i = 0; i < group.order(); ++i)
        for (size_t j = 0; j < group.order(); ++j) {
            DenseMatrix<K> prod = group.elements[i] * group.elements[j];
            auto it = index.find(detail::matrix_key(prod));
            if (it == index.end()) throw std::logic_error("multiplication_table: group not closed");
            table[i][j] = it->second;
        }
    return table;
}

/// Index of the inverse of elements[i].
template <typename K>
size_t inverse_index(const MatrixGroup<K>& group, size_t i,
                     const std::vector<std::vector<size_t>>& table) {
    for (size_t j = 0; j < group.order(); ++j)
        if (table[i][j] == 0) return j;
    throw std::logic_error("inverse_index: no inverse found");
}

/// The action of a group element on polynomials: x_j picks up column j of the
/// matrix, x_j -> sum_k M(k,j) x_k. This substitution composes covariantly
/// (act(s*t, f) = act(s, act(t, f))) and on the Jordan generator [[1,1],[0,1]]
/// it fixes x1 and sends x2 to x2 + x1.
template <typename K>
Polynomial<K> act(const DenseMatrix<K>& m, const Polynomial<K>& f) {
    if (m.rows() != m.cols() || static_cast<size_t>(m.rows()) != f.ring.nvars)
        throw std::invalid_argument("act: matrix size does not match variable count");
    std::vector<Polynomial<K>> images;
    images.reserve(f.ring.nvars);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        Polynomial<K> img(f.ring);
        for (Eigen::Index k = 0; k < m.rows(); ++k)
            img.add_term(Monomial::variable(f.ring.nvars, static_cast<size_t>(k)), m(k, j));
        images.push_back(std::move(img));
    }
    return f.substitute(images);
}

template <typename K>
PolyRing ring_of(const MatrixGroup<K>& group) {
    return PolyRing(static_cast<size_t>(group.dimension), group.field);
}

/// True iff the matrix image has exactly the abstract order, i.e. the
/// representation has trivial kernel.
template <typename K>
bool check_faithful(long long abstractOrder, const MatrixGroup<K>& g) {
    if (abstractOrder < 1) throw std::invalid_argument("check_faithful: abstract order must be >= 1");
    return static_cast<long long>(g.order()) == abstractOrder;
}

/// Kronecker product, used for the vector-copies construction.
template <typename K>
DenseMatrix<K> kronecker(const DenseMatrix<K>& a, const DenseMatrix<K>& b, const FieldSpec& field) {
    DenseMatrix<K> out = zero_matrix<K>(field, a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

}  // namespace coinv

#endif  // COINV_MATRIX_GROUP_HPP
