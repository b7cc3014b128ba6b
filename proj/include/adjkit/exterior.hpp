#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "adjkit/matrix.hpp"

namespace adjkit {

/// Element of the k-th wedge power of K^n, stored as its Plücker coordinates
/// in lexicographic basis order. Grade-1 wedge vectors are ordinary vectors.
template <class S>
struct WedgeVector {
    int ambient = 0;
    int grade = 0;
    std::vector<S> coords;

    WedgeVector() = default;
    WedgeVector(int n, int k) : ambient(n), grade(k) {
        if (k < 0 || k > n) throw DomainError("WedgeVector: grade out of range");
        coords.assign(static_cast<std::size_t>(binomial(n, k)), ScalarTraits<S>::zero());
    }

    double max_abs() const {
        double m = 0.0;
        for (const S& v : coords) m = std::max(m, ScalarTraits<S>::abs_approx(v));
        return m;
    }

    bool operator==(const WedgeVector& o) const {
        return ambient == o.ambient && grade == o.grade && coords == o.coords;
    }
};

/// Bilinear pairing sum_I w_I v_I (no conjugation).
template <class S>
S wedge_pairing(const WedgeVector<S>& w, const WedgeVector<S>& v) {
    if (w.ambient != v.ambient || w.grade != v.grade)
        throw DomainError("wedge_pairing: mismatched wedge spaces");
    S s = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < w.coords.size(); ++i) s += w.coords[i] * v.coords[i];
    return s;
}

/// Plücker coordinates of the wedge of the columns of X (n x k): the vector
/// of all k x k minors taken with full column set, in lex row-subset order.
/// The result is zero exactly when the columns are linearly dependent.
template <class S>
WedgeVector<S> wedge_encode(const Matrix<S>& x) {
    const int n = x.rows(), k = x.cols();
    if (k < 1 || k > n) throw DomainError("wedge_encode: need 1 <= k <= n");
    WedgeVector<S> p(n, k);
    const IndexSubset all_cols = IndexSubset::first(k, k);
    const auto row_subsets = lex_subsets(n, k);
    for (std::size_t r = 0; r < row_subsets.size(); ++r) {
        p.coords[r] = submatrix_det(x, row_subsets[r], all_cols);
    }
    return p;
}

/// Recover a spanning matrix V (n x k) from a nonzero decomposable wedge
/// vector, normalized so that wedge_encode(V) reproduces the input exactly
/// (exact kernel) or within tolerance (floating kernel).
///
/// Construction: choose a pivot subset I with nonzero coordinate p_I (largest
/// magnitude in the floating kernel, first nonzero in the exact kernel).
/// Column j gets, at position m, the coordinate of I with its j-th element
/// replaced by m, carrying the re-sorting sign; rows indexed by I then form
/// p_I times the identity. Dividing all but the first column by p_I makes the
/// round trip exact rather than merely proportional.
template <class S>
Matrix<S> wedge_decode(const WedgeVector<S>& p, const TolerancePolicy& tol = {}) {
    const int n = p.ambient, k = p.grade;
    if (k < 1 || k > n) throw DomainError("wedge_decode: grade out of range");
    const double scale = p.max_abs();

    std::int64_t pivot_rank = -1;
    if constexpr (ScalarTraits<S>::is_exact) {
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            if (!p.coords[i].is_zero()) {
                pivot_rank = static_cast<std::int64_t>(i);
                break;
            }
        }
        if (pivot_rank < 0) throw ZeroMatrixError("wedge_decode: zero wedge vector");
    } else {
        double best = tol.absolute_floor;
        for (std::size_t i = 0; i < p.coords.size(); ++i) {
            const double v = std::abs(p.coords[i]);
            if (v > best) {
                best = v;
                pivot_rank = static_cast<std::int64_t>(i);
            }
        }
        if (pivot_rank < 0) throw ZeroMatrixError("wedge_decode: numerically zero wedge vector");
    }

    const IndexSubset pivot = IndexSubset::unrank(n, k, pivot_rank);
    const S p_pivot = p.coords[static_cast<std::size_t>(pivot_rank)];

    Matrix<S> v(n, k);
    std::vector<int> replaced(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        for (int m = 1; m <= n; ++m) {
            if (pivot.contains(m) && m != pivot[j]) continue;  // repeated index
            std::copy(pivot.elements().begin(), pivot.elements().end(), replaced.begin());
            replaced[static_cast<std::size_t>(j)] = m;
            // Parity of the bubble sort that restores increasing order.
            int sign = 1;
            std::vector<int> sorted = replaced;
            for (std::size_t a = 0; a + 1 < sorted.size(); ++a) {
                for (std::size_t b = 0; b + 1 < sorted.size() - a; ++b) {
                    if (sorted[b] > sorted[b + 1]) {
                        std::swap(sorted[b], sorted[b + 1]);
                        sign = -sign;
                    }
                }
            }
            const IndexSubset target(n, std::move(sorted));
            const S coord = p.coords[static_cast<std::size_t>(target.rank())];
            v(m - 1, j) = (sign > 0) ? coord : -coord;
        }
    }
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < n; ++i) v(i, j) /= p_pivot;
    }

    // Operational decomposability test: re-encode and compare.
    const WedgeVector<S> back = wedge_encode(v);
    if constexpr (ScalarTraits<S>::is_exact) {
        if (!(back == p))
            throw NotDecomposableError("wedge_decode: vector is not a decomposable wedge");
    } else {
        double resid = 0.0;
        for (std::size_t i = 0; i < p.coords.size(); ++i)
            resid = std::max(resid, std::abs(back.coords[i] - p.coords[i]));
        if (resid > tol.absolute_floor + tol.relative_eps * scale)
            throw NotDecomposableError("wedge_decode: re-encode residual above tolerance");
    }
    return v;
}

}  // namespace adjkit
