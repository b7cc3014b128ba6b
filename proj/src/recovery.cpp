#include "adjkit/recovery.hpp"

#include <algorithm>

namespace adjkit {

std::vector<std::vector<double>> hermitian_ev_magnitudes(const Matrix<Complex>& a,
                                                         const TolerancePolicy& tol,
                                                         double root_tol) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("hermitian_ev_magnitudes: matrix must be square");
    if (n < 1) throw DomainError("hermitian_ev_magnitudes: need n >= 1");
    const double scale = std::max(a.max_abs(), 1.0);
    if (max_abs_diff(a, a.conjugate_transpose()) > tol.absolute_floor + tol.relative_eps * scale)
        throw DomainError("hermitian_ev_magnitudes: matrix is not Hermitian within tolerance");

    if (n == 1) return {{1.0}};

    const CharPoly<Complex> p = charpoly_faddeev(a);
    std::vector<Complex> roots = aberth_roots(p, root_tol);
    // Degeneracy is judged on the scale of the spectrum itself; the Cauchy
    // bound overshoots it wildly once coefficients grow.
    double spectral_scale = 1.0;
    for (const Complex& r : roots) spectral_scale = std::max(spectral_scale, std::abs(r));
    const double cluster_tol = std::max(1e-6, 1e3 * root_tol) * spectral_scale;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) <= cluster_tol)
                throw DegenerateSpectrumError(
                    "hermitian_ev_magnitudes: repeated eigenvalue within cluster tolerance");
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    // Coefficient-route roots of size-8 problems carry far more error than
    // the adjugate table tolerates; polish each simple root on the matrix.
    for (Complex& r : roots) r = refine_eigenvalue(a, r, 1, tol);

    std::vector<std::vector<double>> table;
    table.reserve(roots.size());
    for (const Complex& lambda : roots) {
        Matrix<Complex> b = a;
        for (int i = 0; i < n; ++i) b(i, i) -= lambda;
        const Matrix<Complex> adj = higher_adjugate(b, 1);
        const Complex t = trace(adj);
        // tr adj(A - lambda I) = -P'(lambda); it vanishes only at repeated
        // eigenvalues, which were rejected above.
        if (std::abs(t) <= tol.absolute_floor + tol.relative_eps * hadamard_minor_bound(b, n - 1))
            throw DegenerateSpectrumError(
                "hermitian_ev_magnitudes: vanishing adjugate trace at an eigenvalue");
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = (adj(j, j) / t).real();
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace adjkit
