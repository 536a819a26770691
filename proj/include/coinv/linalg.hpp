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

// Exact dense linear algebra over Q and F_p on Eigen matrices. Eigen's own
// decompositions pivot by magnitude, which has no meaning in an exact field,
// so row reduction is done here: any nonzero pivot is as good as any other.

#ifndef COINV_LINALG_HPP
#define COINV_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "coinv/fields.hpp"

namespace coinv {

inline Rational field_inverse(const Rational& x) { return x.inverse(); }
inline Fp field_inverse(const Fp& x) { return x.inverse(); }

template <class K>
using DenseMatrix = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using DenseVector = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
DenseMatrix<K> identity_matrix(const FieldSpec& field, Eigen::Index n) {
    DenseMatrix<K> m(n, n);
    m.setConstant(field_zero<K>(field));
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = field_one<K>(field);
    return m;
}

template <class K>
DenseMatrix<K> zero_matrix(const FieldSpec& field, Eigen::Index rows, Eigen::Index cols) {
    DenseMatrix<K> m(rows, cols);
    m.setConstant(field_zero<K>(field));
    return m;
}

/// In-place reduced row echelon form. Pivot rule: leftmost unprocessed column,
/// topmost nonzero entry, so the result is deterministic. Returns pivot columns.
template <class K>
std::vector<Eigen::Index> row_reduce(DenseMatrix<K>& a) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pr = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (!is_zero(a(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) a.row(r).swap(a.row(pr));
        K inv = field_inverse(a(r, c));
        for (Eigen::Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            K f = a(i, c);
            for (Eigen::Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
Eigen::Index rank(DenseMatrix<K> a) {
    return static_cast<Eigen::Index>(row_reduce(a).size());
}

/// Basis of the right nullspace, one column per free variable, in standard
/// form: entry 1 at the free column's own coordinate. Column order follows the
/// free columns left to right; `freeColumns`, when given, receives their
/// indices in the same order.
template <class K>
DenseMatrix<K> nullspace(DenseMatrix<K> a, const FieldSpec& field,
                         std::vector<Eigen::Index>* freeColumns = nullptr) {
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivots = row_reduce(a);
    std::vector<bool> isPivot(cols, false);
    for (Eigen::Index c : pivots) isPivot[c] = true;
    const Eigen::Index dim = cols - static_cast<Eigen::Index>(pivots.size());
    DenseMatrix<K> basis = zero_matrix<K>(field, cols, dim);
    if (freeColumns) freeColumns->clear();
    Eigen::Index k = 0;
    for (Eigen::Index f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        if (freeColumns) freeColumns->push_back(f);
        basis(f, k) = field_one<K>(field);
        for (size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] < f && !is_zero(a(static_cast<Eigen::Index>(i), f)))
                basis(pivots[i], k) = -a(static_cast<Eigen::Index>(i), f);
        }
        ++k;
    }
    return basis;
}

/// Exact inverse via Gauss-Jordan on [A | I]; nullopt when singular.
template <class K>
std::optional<DenseMatrix<K>> invert(const DenseMatrix<K>& a, const FieldSpec& field) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) return std::nullopt;
    DenseMatrix<K> work = zero_matrix<K>(field, n, 2 * n);
    work.block(0, 0, n, n) = a;
    for (Eigen::Index i = 0; i < n; ++i) work(i, n + i) = field_one<K>(field);
    std::vector<Eigen::Index> pivots = row_reduce(work);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    return DenseMatrix<K>(work.block(0, n, n, n));
}

/// Incrementally maintained row space in reduced echelon form, used for rank
/// and membership bookkeeping while feeding rows one at a time.
template <class K>
class EchelonRowSpace {
   public:
    EchelonRowSpace(const FieldSpec& field, Eigen::Index width) : field_(field), width_(width) {}

    /// Reduces the row against the space; if a nonzero remainder survives it is
    /// inserted. Returns true when the row enlarged the space.
    bool insert(DenseVector<K> row) {
        reduce(row);
        Eigen::Index lead = leading_index(row);
        if (lead < 0) return false;
        K inv = field_inverse(row(lead));
        for (Eigen::Index j = lead; j < width_; ++j) row(j) = row(j) * inv;
        // keep rows fully reduced against the new one
        for (auto& [piv, r] : rows_) {
            if (!is_zero(r(lead))) {
                K f = r(lead);
                for (Eigen::Index j = 0; j < width_; ++j) r(j) = r(j) - f * row(j);
            }
        }
        rows_.emplace(lead, std::move(row));
        return true;
    }

    bool contains(DenseVector<K> row) const {
        reduce(row);
        return leading_index(row) < 0;
    }

    Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

   private:
    void reduce(DenseVector<K>& row) const {
        for (const auto& [piv, r] : rows_) {
            if (!is_zero(row(piv))) {
                K f = row(piv);
                for (Eigen::Index j = piv; j < width_; ++j) row(j) = row(j) - f * r(j);
            }
        }
    }
    Eigen::Index leading_index(const DenseVector<K>& row) const {
        for (Eigen::Index j = 0; j < width_; ++j)
            if (!is_zero(row(j))) return j;
        return -1;
    }

    FieldSpec field_;
    Eigen::Index width_;
    std::map<Eigen::Index, DenseVector<K>> rows_;  // pivot column -> unit row
};

}  // namespace coinv

#endif  // COINV_LINALG_HPP
