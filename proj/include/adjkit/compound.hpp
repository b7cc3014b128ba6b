#pragma once

#include "adjkit/matrix.hpp"

namespace adjkit {

/// k-th compound matrix: all k x k minors of A, rows and columns indexed by
/// lexicographically ordered index subsets. compound(A, 0) is the 1 x 1
/// matrix [1].
template <class S>
Matrix<S> compound(const Matrix<S>& a, int k) {
    if (k == 0) {
        Matrix<S> one(1, 1);
        one(0, 0) = ScalarTraits<S>::one();
        return one;
    }
    if (k < 0 || k > std::min(a.rows(), a.cols()))
        throw DomainError("compound: need 0 <= k <= min(rows, cols)");
    const auto row_subsets = lex_subsets(a.rows(), k);
    const auto col_subsets = lex_subsets(a.cols(), k);
    Matrix<S> c(static_cast<int>(row_subsets.size()), static_cast<int>(col_subsets.size()));
    for (std::size_t i = 0; i < row_subsets.size(); ++i)
        for (std::size_t j = 0; j < col_subsets.size(); ++j)
            c(static_cast<int>(i), static_cast<int>(j)) =
                submatrix_det(a, row_subsets[i], col_subsets[j]);
    return c;
}

/// k-th adjugate of a square matrix. Entry (I, J) carries the sign
/// (-1)^(sum I + sum J) times the complementary minor det A[comp(J), comp(I)].
///
/// The complement-of-J-rows / complement-of-I-columns orientation makes
/// adj_1 equal the classical adjugate, so that
///   C_k(A) adj_k(A) = adj_k(A) C_k(A) = det(A) I
/// holds (verified against the permutation-expansion determinant oracle in
/// the test suite). Boundary conventions: adj_0(A) = [det A], adj_n(A) = [1].
template <class S>
Matrix<S> higher_adjugate(const Matrix<S>& a, int k) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("higher_adjugate: matrix must be square");
    if (k < 0 || k > n) throw DomainError("higher_adjugate: need 0 <= k <= n");
    if (k == 0) {
        Matrix<S> d(1, 1);
        d(0, 0) = det(a);
        return d;
    }
    if (k == n) {
        Matrix<S> one(1, 1);
        one(0, 0) = ScalarTraits<S>::one();
        return one;
    }
    const auto subsets = lex_subsets(n, k);
    const int dim = static_cast<int>(subsets.size());
    Matrix<S> adj(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const IndexSubset& si = subsets[static_cast<std::size_t>(i)];
        const IndexSubset ci = si.complement();
        for (int j = 0; j < dim; ++j) {
            const IndexSubset& sj = subsets[static_cast<std::size_t>(j)];
            const S minor = submatrix_det(a, sj.complement(), ci);
            adj(i, j) = (subset_sign(si, sj) > 0) ? minor : -minor;
        }
    }
    return adj;
}

/// Signed anti-diagonal matrix with entry (i, j) = (-1)^i when i = n - j + 1
/// (1-based); orthogonal.
template <class S>
Matrix<S> delta_matrix(int n) {
    if (n < 1) throw DomainError("delta_matrix: need n >= 1");
    Matrix<S> d(n, n);
    for (int i = 1; i <= n; ++i) {
        const int j = n - i + 1;
        d(i - 1, j - 1) = (i % 2 == 0) ? ScalarTraits<S>::one() : -ScalarTraits<S>::one();
    }
    return d;
}

/// det(A + B) as the sum over k of tr(adj_k(A) C_k(B)), including the
/// boundary terms adj_0(A) = [det A] with C_0(B) = [1] and adj_n(A) = [1]
/// with C_n(B) = [det B].
template <class S>
S det_sum(const Matrix<S>& a, const Matrix<S>& b) {
    const int n = a.rows();
    if (n != a.cols() || b.rows() != b.cols() || b.rows() != n)
        throw DomainError("det_sum: matrices must be square and equally sized");
    S total = ScalarTraits<S>::zero();
    for (int k = 0; k <= n; ++k) {
        total += trace(higher_adjugate(a, k) * compound(b, k));
    }
    return total;
}

}  // namespace adjkit
