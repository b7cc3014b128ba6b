#pragma once

#include <cmath>
#include <vector>

#include "adjkit/compound.hpp"
#include "adjkit/matrix.hpp"

namespace adjkit {

/// Characteristic polynomial P(x) = det(A - x I) stored by coefficients
/// a_0..a_n with P(x) = sum a_k x^k; a_0 = det A and a_n = (-1)^n.
template <class S>
struct CharPoly {
    std::vector<S> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    S eval(const S& x) const {
        S acc = ScalarTraits<S>::zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

/// Coefficients via adjugate traces: a_k = (-1)^k tr(adj_k(A)), with the
/// boundary conventions adj_0 = [det A] and adj_n = [1].
template <class S>
CharPoly<S> charpoly_via_adjugates(const Matrix<S>& a) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("charpoly_via_adjugates: matrix must be square");
    if (n < 1) throw DomainError("charpoly_via_adjugates: need n >= 1");
    CharPoly<S> p;
    p.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const S t = trace(higher_adjugate(a, k));
        p.coeffs[static_cast<std::size_t>(k)] = (k % 2 == 0) ? t : -t;
    }
    return p;
}

/// Independent coefficient oracle: the Faddeev-LeVerrier trace recursion.
/// Same coefficient contract as charpoly_via_adjugates.
template <class S>
CharPoly<S> charpoly_faddeev(const Matrix<S>& a) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("charpoly_faddeev: matrix must be square");
    if (n < 1) throw DomainError("charpoly_faddeev: need n >= 1");
    // q_k coefficients of the monic det(x I - A); then a_k = (-1)^n q_k.
    std::vector<S> q(static_cast<std::size_t>(n) + 1, ScalarTraits<S>::zero());
    q[static_cast<std::size_t>(n)] = ScalarTraits<S>::one();
    Matrix<S> m = Matrix<S>::identity(n);
    Matrix<S> am = a * m;
    q[static_cast<std::size_t>(n - 1)] = -trace(am);
    for (int k = 2; k <= n; ++k) {
        m = am;
        const S& shift = q[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) m(i, i) += shift;
        am = a * m;
        q[static_cast<std::size_t>(n - k)] = -(trace(am) / ScalarTraits<S>::from_int(k));
    }
    CharPoly<S> p;
    p.coeffs.resize(q.size());
    for (std::size_t k = 0; k < q.size(); ++k)
        p.coeffs[k] = (n % 2 == 0) ? q[k] : -q[k];
    return p;
}

/// j-th derivative of the characteristic polynomial at lambda through the
/// higher-adjugate trace: P^(j)(lambda) = (-1)^j j! tr(adj_j(A - lambda I)).
template <class S>
S jacobi_derivative(const Matrix<S>& a, const S& lambda, int j) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("jacobi_derivative: matrix must be square");
    if (j < 1 || j > n) throw DomainError("jacobi_derivative: need 1 <= j <= n");
    Matrix<S> b = a;
    for (int i = 0; i < n; ++i) b(i, i) -= lambda;
    long fact = 1;
    for (int i = 2; i <= j; ++i) fact *= i;
    const S t = trace(higher_adjugate(b, j));
    const S scaled = t * ScalarTraits<S>::from_int(fact);
    return (j % 2 == 0) ? scaled : -scaled;
}

/// P^(j)(lambda) by coefficient differentiation and Horner evaluation;
/// the cross-check path for jacobi_derivative. j above the degree yields 0.
template <class S>
S poly_derivative_eval(const CharPoly<S>& p, int j, const S& lambda) {
    if (j < 0) throw DomainError("poly_derivative_eval: need j >= 0");
    const int deg = p.degree();
    if (j > deg) return ScalarTraits<S>::zero();
    S acc = ScalarTraits<S>::zero();
    for (int m = deg; m >= j; --m) {
        long fall = 1;  // m (m-1) ... (m-j+1)
        for (int t = 0; t < j; ++t) fall *= (m - t);
        acc = acc * lambda + p.coeffs[static_cast<std::size_t>(m)] * ScalarTraits<S>::from_int(fall);
    }
    return acc;
}

/// 1 + max |a_k / a_n|: every root lies inside this radius.
inline double cauchy_bound(const CharPoly<Complex>& p) {
    const double lead = std::abs(p.coeffs.back());
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < p.coeffs.size(); ++k)
        m = std::max(m, std::abs(p.coeffs[k]) / lead);
    return 1.0 + m;
}

/// All roots (with multiplicity) by the simultaneous Aberth-Ehrlich
/// iteration, started on a perturbed circle at the Cauchy bound. A root z is
/// accepted when |P(z)| <= tol (1 + |z|)^n max_k |a_k|. Throws
/// ConvergenceError (carrying the best iterate) after max_iter sweeps.
std::vector<Complex> aberth_roots(const CharPoly<Complex>& p, double tol = 1e-12,
                                  int max_iter = 500);

/// Eigenvalue cluster: centroid, algebraic multiplicity (cluster size),
/// geometric multiplicity (adjugate rank route), and cluster radius.
struct SpectrumEntry {
    Complex eigenvalue;
    int algebraic = 0;
    int geometric = 0;
    double cluster_radius = 0.0;
};

/// Geometric multiplicity of an eigenvalue through adjugate ranks: n when
/// A = lambda I, otherwise the first k with adj_k(A - lambda I) != 0, which
/// then has rank 1. Cross-checked against n - rank(A - lambda I); the two
/// routes must agree.
template <class S>
int geometric_multiplicity(const Matrix<S>& a, const S& lambda, const TolerancePolicy& tol = {}) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("geometric_multiplicity: matrix must be square");
    Matrix<S> b = a;
    for (int i = 0; i < n; ++i) b(i, i) -= lambda;

    if constexpr (ScalarTraits<S>::is_exact) {
        if (is_zero_matrix(b, tol, 0.0)) return n;
        const int r = rank(b, tol);
        if (r == n)
            throw DomainError("geometric_multiplicity: lambda is not an eigenvalue");
        int k = -1;
        for (int j = 1; j <= n - 1; ++j) {
            const Matrix<S> adj_j = higher_adjugate(b, j);
            if (is_zero_matrix(adj_j, tol, 0.0)) continue;
            if (rank(adj_j, tol) != 1)
                throw Error("geometric_multiplicity: first nonzero adjugate has rank > 1");
            k = j;
            break;
        }
        if (k < 0)
            throw Error("geometric_multiplicity: no nonzero adjugate found below grade n");
        if (k != n - r)
            throw Error("geometric_multiplicity: adjugate route disagrees with rank route");
        return k;
    } else {
        // Floating path. Absolute thresholds drown in the cancellation gap
        // between Hadamard bounds and true adjugate magnitudes, so the
        // decisions here are ratio tests: the Hadamard-normalized magnitude
        // profile of adj_1..adj_{n-1} jumps by orders of magnitude at the
        // deficiency, and rank 1 shows as a sharp pivot drop.
        const double entry_scale = std::max(a.max_abs(), ScalarTraits<S>::abs_approx(lambda));
        const MinorUncertainty unc(b, tol, entry_scale);
        const double b_max = b.max_abs();
        if (b_max <= static_cast<double>(n) * unc.eta()) return n;

        TolerancePolicy rank_pol = tol;
        rank_pol.relative_eps = clamp_relative(unc.eta() / std::max(b_max, 1e-30),
                                               tol.relative_eps);
        const int r = rank(b, rank_pol);
        if (r == n)
            throw DomainError(
                "geometric_multiplicity: lambda is not an eigenvalue within tolerance");

        const int k = n - r;

        // Adjugate route, scale-free: an ascending search with the zero
        // threshold placed just under s_k concludes exactly k iff the
        // profile falls off a cliff below the deficiency. A missing cliff
        // means the two routes disagree at every consistent threshold.
        std::vector<double> profile;
        Matrix<S> adj_k;
        for (int j = 1; j <= n - 1; ++j) {
            Matrix<S> adj_j = higher_adjugate(b, j);
            profile.push_back(adj_j.max_abs() / std::max(unc.minor_bound(n - j), 1e-30));
            if (j == k) adj_k = std::move(adj_j);
        }
        const double s_k = profile[static_cast<std::size_t>(k - 1)];
        double below = 0.0;
        for (int j = 1; j < k; ++j)
            below = std::max(below, profile[static_cast<std::size_t>(j - 1)]);
        if (s_k <= 0.0 || s_k <= 1e3 * below)
            throw Error("geometric_multiplicity: adjugate route disagrees with rank route; "
                        "lambda appears inaccurate");
        const auto pivots = pivot_magnitudes(adj_k);
        if (pivots.size() >= 2 && pivots[1] > 1e-3 * pivots[0])
            throw Error("geometric_multiplicity: first nonzero adjugate has rank > 1; "
                        "lambda appears inaccurate");
        return k;
    }
}

/// Sharpen an eigenvalue estimate of known multiplicity against the matrix
/// itself: inverse subspace iteration on A - lambda I (and its transpose)
/// followed by the block trace ratio tr((W^T V)^-1 W^T A V) / m. Roots of
/// multiplicity m recovered from polynomial coefficients scatter like
/// eps^(1/m), far above what the adjugate identities tolerate; this walks
/// the estimate back to the roundoff floor. Defective or ill-paired
/// subspaces stop the iteration and return the best estimate so far.
Complex refine_eigenvalue(const Matrix<Complex>& a, Complex lambda, int multiplicity,
                          const TolerancePolicy& tol = {});

/// Merge approximate roots into eigenvalue clusters. Roots closer than
/// cluster_tol (single linkage) land in one cluster; the eigenvalue estimate
/// is the cluster centroid sharpened by refine_eigenvalue. cluster_tol <= 0
/// selects the default max(1e-6, 1e3 * root_tol) in units of the Cauchy
/// bound of the characteristic polynomial.
std::vector<SpectrumEntry> cluster_multiplicities(const std::vector<Complex>& roots,
                                                  const Matrix<Complex>& a,
                                                  const TolerancePolicy& tol = {},
                                                  double root_tol = 1e-12,
                                                  double cluster_tol = 0.0);

/// One rational root of a rational-coefficient polynomial with its
/// multiplicity.
struct RationalRoot {
    RationalComplex value;
    int multiplicity = 0;
};

/// Rational-root search for exact characteristic polynomials with rational
/// (real) coefficients: candidates p/q with p dividing the trailing and q the
/// leading integerized coefficient. Exact-mode helper; complex-rational
/// coefficient polynomials yield an empty result.
std::vector<RationalRoot> rational_roots(const CharPoly<RationalComplex>& p);

}  // namespace adjkit
