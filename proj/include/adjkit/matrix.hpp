#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "adjkit/scalar.hpp"
#include "adjkit/subsets.hpp"

namespace adjkit {

/// Dense row-major matrix over one scalar kernel (exact RationalComplex or
/// floating Complex). Dimensions of zero are allowed so that empty kernel
/// bases (n x 0) are representable.
template <class S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                ScalarTraits<S>::zero()) {
        if (rows < 0 || cols < 0) throw DomainError("Matrix: negative dimension");
    }
    Matrix(int rows, int cols, std::vector<S> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows < 0 || cols < 0) throw DomainError("Matrix: negative dimension");
        if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw ShapeError("Matrix: entry count does not match dimensions");
        if constexpr (!ScalarTraits<S>::is_exact) {
            for (const S& v : data_) {
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw DomainError("Matrix: non-finite entry in floating kernel");
            }
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    S& operator()(int i, int j) {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(j)];
    }
    const S& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(j)];
    }

    const std::vector<S>& data() const { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise complex conjugate.
    Matrix conjugate() const {
        Matrix c(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) c(i, j) = ScalarTraits<S>::conj((*this)(i, j));
        return c;
    }

    Matrix conjugate_transpose() const { return conjugate().transpose(); }

    Matrix column(int j) const {
        Matrix c(rows_, 1);
        for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    /// Largest entry magnitude (approximate for the exact kernel).
    double max_abs() const {
        double m = 0.0;
        for (const S& v : data_) m = std::max(m, ScalarTraits<S>::abs_approx(v));
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o, "operator+");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o, "operator-");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (S& v : data_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("operator*: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DomainError(std::string(op) + ": shape mismatch");
    }

    int rows_;
    int cols_;
    std::vector<S> data_;
};

using ExactMatrix = Matrix<RationalComplex>;
using FloatMatrix = Matrix<Complex>;

template <class S>
S trace(const Matrix<S>& a) {
    if (a.rows() != a.cols()) throw DomainError("trace: matrix must be square");
    S t = ScalarTraits<S>::zero();
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

template <class S>
double max_abs_diff(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            m = std::max(m, ScalarTraits<S>::abs_approx(a(i, j) - b(i, j)));
    return m;
}

/// True when every entry is zero relative to `scale` (exactly zero for the
/// exact kernel). `scale` should reflect the natural magnitude of the
/// quantity under test, e.g. a Hadamard bound for minors.
template <class S>
bool is_zero_matrix(const Matrix<S>& m, const TolerancePolicy& tol, double scale) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!ScalarTraits<S>::is_zero(m(i, j), tol, scale)) return false;
    return true;
}

/// Product of the `m` largest row 2-norms: an upper bound on the magnitude of
/// any m x m minor (Hadamard). Used to scale floating zero tests on
/// adjugate/compound entries.
template <class S>
double hadamard_minor_bound(const Matrix<S>& a, int m) {
    if (m <= 0) return 1.0;
    std::vector<double> norms(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j) {
            const double v = ScalarTraits<S>::abs_approx(a(i, j));
            s += v * v;
        }
        norms[static_cast<std::size_t>(i)] = std::sqrt(s);
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    double bound = 1.0;
    for (int i = 0; i < m && i < static_cast<int>(norms.size()); ++i)
        bound *= std::max(norms[static_cast<std::size_t>(i)], 1e-30);
    return bound;
}

/// Forward uncertainty bounds for minors of a matrix whose entries are only
/// known up to an absolute perturbation eta (for shifted matrices A - λI,
/// eta absorbs the eigenvalue error). An m-minor moves by at most
/// m * eta * (bound on (m-1)-minors of the perturbed rows); zero tests on
/// adjugate entries compare against that, not against the shrunken rows of
/// the nearly singular matrix itself.
template <class S>
class MinorUncertainty {
public:
    MinorUncertainty(const Matrix<S>& b, const TolerancePolicy& tol, double entry_scale)
        : eta_(tol.absolute_floor + tol.relative_eps * std::max(entry_scale, 1e-30)) {
        const double fudge = std::sqrt(static_cast<double>(std::max(b.cols(), 1)));
        norms_.resize(static_cast<std::size_t>(b.rows()));
        for (int i = 0; i < b.rows(); ++i) {
            double s = 0.0;
            for (int j = 0; j < b.cols(); ++j) {
                const double v = ScalarTraits<S>::abs_approx(b(i, j));
                s += v * v;
            }
            norms_[static_cast<std::size_t>(i)] = std::sqrt(s) + eta_ * fudge;
        }
        std::sort(norms_.begin(), norms_.end(), std::greater<>());
    }

    double eta() const { return eta_; }

    /// Hadamard bound on m-minors of the eta-perturbed matrix.
    double minor_bound(int m) const {
        double bound = 1.0;
        for (int i = 0; i < m && i < static_cast<int>(norms_.size()); ++i)
            bound *= std::max(norms_[static_cast<std::size_t>(i)], 1e-30);
        return bound;
    }

    /// Absolute uncertainty of one m x m minor.
    double entry_bound(int m) const {
        if (m <= 0) return 0.0;
        return static_cast<double>(m) * eta_ * minor_bound(m - 1);
    }

private:
    double eta_;
    std::vector<double> norms_;
};

inline double clamp_relative(double value, double lo) {
    return std::min(std::max(value, lo), 0.25);
}

/// Pivot magnitudes of a complete-pivoting elimination (the global maximum
/// of the remaining submatrix each step): a rank-revealing, decreasing-ish
/// profile. A sharp drop between consecutive pivots separates signal
/// directions from noise without any absolute scale.
template <class S>
std::vector<double> pivot_magnitudes(Matrix<S> m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<double> piv;
    const int steps = std::min(rows, cols);
    for (int step = 0; step < steps; ++step) {
        int pr = -1, pc = -1;
        double best = 0.0;
        for (int i = step; i < rows; ++i) {
            for (int j = step; j < cols; ++j) {
                const double v = ScalarTraits<S>::abs_approx(m(i, j));
                if (v > best) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0 || best == 0.0) break;
        if (pr != step)
            for (int j = 0; j < cols; ++j) std::swap(m(pr, j), m(step, j));
        if (pc != step)
            for (int i = 0; i < rows; ++i) std::swap(m(i, pc), m(i, step));
        piv.push_back(best);
        for (int i = step + 1; i < rows; ++i) {
            const S f = m(i, step) / m(step, step);
            for (int j = step + 1; j < cols; ++j) m(i, j) -= f * m(step, j);
            m(i, step) = ScalarTraits<S>::zero();
        }
    }
    return piv;
}

namespace detail {

/// Determinant of a full square matrix. Exact kernel: Bareiss fraction-free
/// elimination. Floating kernel: partial-pivot LU.
template <class S>
S det_in_place(Matrix<S>& m) {
    const int n = m.rows();
    if (n == 0) return ScalarTraits<S>::one();
    if (n == 1) return m(0, 0);
    int sign = 1;
    if constexpr (ScalarTraits<S>::is_exact) {
        S prev = ScalarTraits<S>::one();
        for (int k = 0; k + 1 < n; ++k) {
            int pivot = -1;
            for (int i = k; i < n; ++i) {
                if (!m(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return ScalarTraits<S>::zero();
            if (pivot != k) {
                for (int j = k; j < n; ++j) std::swap(m(pivot, j), m(k, j));
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                }
                m(i, k) = ScalarTraits<S>::zero();
            }
            prev = m(k, k);
        }
        S d = m(n - 1, n - 1);
        return sign > 0 ? d : -d;
    } else {
        Complex det(1.0, 0.0);
        for (int k = 0; k < n; ++k) {
            int pivot = k;
            double best = std::abs(m(k, k));
            for (int i = k + 1; i < n; ++i) {
                const double v = std::abs(m(i, k));
                if (v > best) {
                    best = v;
                    pivot = i;
                }
            }
            if (best == 0.0) return ScalarTraits<S>::zero();
            if (pivot != k) {
                for (int j = k; j < n; ++j) std::swap(m(pivot, j), m(k, j));
                sign = -sign;
            }
            det *= m(k, k);
            for (int i = k + 1; i < n; ++i) {
                const Complex f = m(i, k) / m(k, k);
                for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return static_cast<double>(sign) * det;
    }
}

}  // namespace detail

/// Determinant of a square matrix.
template <class S>
S det(const Matrix<S>& a) {
    if (a.rows() != a.cols()) throw DomainError("det: matrix must be square");
    Matrix<S> work = a;
    return detail::det_in_place(work);
}

/// Determinant of the k x k submatrix selected by 1-based row/column subsets.
template <class S>
S submatrix_det(const Matrix<S>& a, const IndexSubset& rows, const IndexSubset& cols) {
    const int k = rows.size();
    if (k != cols.size()) throw DomainError("submatrix_det: row/column subset sizes differ");
    if (k < 1) throw DomainError("submatrix_det: need at least one row/column");
    if (rows.ambient() > a.rows() || cols.ambient() > a.cols() ||
        rows.elements().back() > a.rows() || cols.elements().back() > a.cols())
        throw DomainError("submatrix_det: subset index out of range");
    Matrix<S> sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = a(rows[i] - 1, cols[j] - 1);
    return detail::det_in_place(sub);
}

/// Brute-force determinant by signed permutation expansion. Independent
/// oracle for every other determinant path; n <= 8 only.
template <class S>
S det_laplace(const Matrix<S>& a) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("det_laplace: matrix must be square");
    if (n > 8) throw SizeError("det_laplace: n > 8 not supported (factorial cost)");
    if (n == 0) return ScalarTraits<S>::one();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    S total = ScalarTraits<S>::zero();
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        S term = ScalarTraits<S>::one();
        for (int i = 0; i < n; ++i) term *= a(i, perm[static_cast<std::size_t>(i)]);
        if (inversions % 2 == 0)
            total += term;
        else
            total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Reduced row echelon form together with the pivot columns.
template <class S>
struct RrefResult {
    Matrix<S> mat;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

template <class S>
RrefResult<S> rref(const Matrix<S>& a, const TolerancePolicy& tol = {}) {
    RrefResult<S> res{a, {}};
    Matrix<S>& m = res.mat;
    const int rows = m.rows(), cols = m.cols();
    const double scale = std::max(a.max_abs(), 1e-30);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        if constexpr (ScalarTraits<S>::is_exact) {
            for (int i = row; i < rows; ++i) {
                if (!m(i, col).is_zero()) {
                    pivot = i;
                    break;
                }
            }
        } else {
            double best = tol.absolute_floor + tol.relative_eps * scale;
            for (int i = row; i < rows; ++i) {
                const double v = std::abs(m(i, col));
                if (v > best) {
                    best = v;
                    pivot = i;
                }
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(row, j));
        const S p = m(row, col);
        for (int j = 0; j < cols; ++j) m(row, j) /= p;
        m(row, col) = ScalarTraits<S>::one();
        for (int i = 0; i < rows; ++i) {
            if (i == row) continue;
            const S f = m(i, col);
            if (ScalarTraits<S>::is_zero(f, tol, scale)) {
                m(i, col) = ScalarTraits<S>::zero();
                continue;
            }
            for (int j = 0; j < cols; ++j) m(i, j) -= f * m(row, j);
            m(i, col) = ScalarTraits<S>::zero();
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    return res;
}

template <class S>
int rank(const Matrix<S>& a, const TolerancePolicy& tol = {}) {
    return rref(a, tol).rank();
}

/// Basis of ker(A) as the columns of an n x d matrix, d = n - rank(A).
/// Deterministic: standard generators read off the reduced row echelon form.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& a, const TolerancePolicy& tol = {}) {
    const auto r = rref(a, tol);
    const int n = a.cols();
    std::vector<int> free_cols;
    {
        std::size_t next = 0;
        for (int c = 0; c < n; ++c) {
            if (next < r.pivot_cols.size() && r.pivot_cols[next] == c) {
                ++next;
            } else {
                free_cols.push_back(c);
            }
        }
    }
    Matrix<S> basis(n, static_cast<int>(free_cols.size()));
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        const int f = free_cols[idx];
        basis(f, static_cast<int>(idx)) = ScalarTraits<S>::one();
        for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
            basis(r.pivot_cols[pi], static_cast<int>(idx)) =
                -r.mat(static_cast<int>(pi), f);
        }
    }
    return basis;
}

/// Factor a rank-1 matrix as M = x * y^T. The pivot is the globally largest
/// entry; x is its column and y the pivot row scaled so the product is exact.
/// Only x * y^T is contractual; x itself is defined up to reciprocal scaling.
template <class S>
std::pair<Matrix<S>, Matrix<S>> rank1_factor(const Matrix<S>& m, const TolerancePolicy& tol = {}) {
    const int rows = m.rows(), cols = m.cols();
    int pr = -1, pc = -1;
    double best = 0.0;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double v = ScalarTraits<S>::abs_approx(m(i, j));
            if (v > best) {
                best = v;
                pr = i;
                pc = j;
            }
        }
    }
    if constexpr (ScalarTraits<S>::is_exact) {
        if (pr < 0) throw ZeroMatrixError("rank1_factor: matrix is zero");
    } else {
        if (pr < 0 || best <= tol.absolute_floor)
            throw ZeroMatrixError("rank1_factor: matrix is numerically zero");
    }
    Matrix<S> x(rows, 1), y(cols, 1);
    for (int i = 0; i < rows; ++i) x(i, 0) = m(i, pc);
    const S pivot = m(pr, pc);
    for (int j = 0; j < cols; ++j) y(j, 0) = m(pr, j) / pivot;
    // Residual test doubles as the 2x2-minor rank check over the pivot.
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const S r = m(i, j) - x(i, 0) * y(j, 0);
            if constexpr (ScalarTraits<S>::is_exact) {
                if (!r.is_zero()) throw RankError("rank1_factor: matrix has rank >= 2");
            } else {
                if (std::abs(r) > tol.relative_eps * best)
                    throw RankError("rank1_factor: matrix has rank >= 2 within tolerance");
            }
        }
    }
    return {x, y};
}

}  // namespace adjkit
