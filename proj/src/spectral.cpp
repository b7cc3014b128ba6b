#include "adjkit/spectral.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace adjkit {

namespace {

Complex poly_eval(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex poly_deriv_eval(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t m = coeffs.size(); m-- > 1;) {
        acc = acc * z + static_cast<double>(m) * coeffs[m];
    }
    return acc;
}

}  // namespace

std::vector<Complex> aberth_roots(const CharPoly<Complex>& p, double tol, int max_iter) {
    const int n = p.degree();
    if (n < 1) throw DomainError("aberth_roots: degree must be >= 1");
    const Complex lead = p.coeffs.back();
    if (std::abs(lead) == 0.0) throw DomainError("aberth_roots: zero leading coefficient");
    if (n == 1) return {-p.coeffs[0] / p.coeffs[1]};

    double max_coef = 0.0;
    for (const Complex& c : p.coeffs) max_coef = std::max(max_coef, std::abs(c));

    const double radius = cauchy_bound(p);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double angle = 2.0 * M_PI * i / n + 0.4;
        z[static_cast<std::size_t>(i)] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    auto residual_ok = [&](Complex zi) {
        return std::abs(poly_eval(p.coeffs, zi)) <=
               tol * std::pow(1.0 + std::abs(zi), n) * max_coef;
    };

    auto sorted_roots = [&]() {
        std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        return z;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_ok = true;
        for (int i = 0; i < n; ++i) {
            if (!residual_ok(z[static_cast<std::size_t>(i)])) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return sorted_roots();

        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex& zi = z[static_cast<std::size_t>(i)];
            const Complex pv = poly_eval(p.coeffs, zi);
            if (std::abs(pv) == 0.0) continue;
            Complex dv = poly_deriv_eval(p.coeffs, zi);
            if (std::abs(dv) == 0.0) {
                // Stationary point of P; nudge off it deterministically.
                zi += Complex(1e-8 * (1.0 + std::abs(zi)), 1e-8);
                max_step = std::max(max_step, 1e-8);
                continue;
            }
            const Complex newton = pv / dv;
            Complex repulsion(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = zi - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - newton * repulsion;
            const Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
            zi -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
        }
        // The iterates stopped moving: roundoff floor reached, nothing more
        // to gain even if the residual target is stricter than attainable.
        if (iter > 0 && max_step <= 16.0 * std::numeric_limits<double>::epsilon())
            return sorted_roots();
    }

    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        worst = std::max(worst, std::abs(poly_eval(p.coeffs, z[static_cast<std::size_t>(i)])));
    throw ConvergenceError("aberth_roots: no convergence after max_iter sweeps", z, worst);
}

namespace {

// Partial-pivot solve; vanishing pivots are floored so that near-singular
// systems amplify the null directions, which is exactly what inverse
// iteration wants.
Matrix<Complex> solve_regularized(Matrix<Complex> b, Matrix<Complex> rhs) {
    const int n = b.rows();
    const double floor_pivot = std::max(b.max_abs(), 1e-30) * 1e-120;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(b(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (std::abs(b(i, k)) > best) {
                best = std::abs(b(i, k));
                pivot = i;
            }
        }
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(b(pivot, j), b(k, j));
            for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs(pivot, j), rhs(k, j));
        }
        if (std::abs(b(k, k)) < floor_pivot) b(k, k) = Complex(floor_pivot, 0.0);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = b(i, k) / b(k, k);
            if (f == Complex(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) b(i, j) -= f * b(k, j);
            for (int j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
            b(i, k) = Complex(0.0, 0.0);
        }
    }
    Matrix<Complex> x(n, rhs.cols());
    for (int j = 0; j < rhs.cols(); ++j) {
        for (int i = n - 1; i >= 0; --i) {
            Complex acc = rhs(i, j);
            for (int t = i + 1; t < n; ++t) acc -= b(i, t) * x(t, j);
            x(i, j) = acc / b(i, i);
        }
    }
    return x;
}

// Modified Gram-Schmidt with the Hermitian inner product.
void orthonormalize(Matrix<Complex>& v) {
    for (int j = 0; j < v.cols(); ++j) {
        for (int i = 0; i < j; ++i) {
            Complex proj(0.0, 0.0);
            for (int r = 0; r < v.rows(); ++r) proj += std::conj(v(r, i)) * v(r, j);
            for (int r = 0; r < v.rows(); ++r) v(r, j) -= proj * v(r, i);
        }
        double norm = 0.0;
        for (int r = 0; r < v.rows(); ++r) norm += std::norm(v(r, j));
        norm = std::sqrt(norm);
        if (norm > 0.0)
            for (int r = 0; r < v.rows(); ++r) v(r, j) /= norm;
    }
}

}  // namespace

Complex refine_eigenvalue(const Matrix<Complex>& a, Complex lambda, int multiplicity,
                          const TolerancePolicy&) {
    const int n = a.rows();
    if (n != a.cols()) throw DomainError("refine_eigenvalue: matrix must be square");
    if (multiplicity < 1 || multiplicity > n)
        throw DomainError("refine_eigenvalue: multiplicity out of range");
    const int m = multiplicity;
    if (m == n) {
        // Full multiplicity: the mean of the diagonal is the exact answer
        // whenever A really is lambda I plus noise.
        Complex t(0.0, 0.0);
        for (int i = 0; i < n; ++i) t += a(i, i);
        return t / static_cast<double>(n);
    }
    const double scale = std::max({a.max_abs(), std::abs(lambda), 1e-30});
    const Complex lambda0 = lambda;
    // Dense deterministic start: coordinate starts can be exactly orthogonal
    // to the target eigenspace (diagonal matrices), which sends the inverse
    // iteration to the wrong eigenvalue.
    Matrix<Complex> v(n, m), w(n, m);
    {
        std::mt19937_64 gen(0x9e3779b97f4a7c15ull);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                v(i, j) = Complex(dist(gen), dist(gen));
                w(i, j) = Complex(dist(gen), dist(gen));
            }
    }
    for (int iter = 0; iter < 8; ++iter) {
        Matrix<Complex> b = a;
        for (int i = 0; i < n; ++i) b(i, i) -= lambda;
        v = solve_regularized(b, v);
        orthonormalize(v);
        w = solve_regularized(b.transpose(), w);
        orthonormalize(w);
        const Matrix<Complex> g = w.transpose() * v;
        const Complex det_g = det(g);
        if (std::abs(det_g) <= 1e-10) break;  // defective pairing, stop here
        const Matrix<Complex> h = w.transpose() * (a * v);
        const Complex next =
            trace(higher_adjugate(g, 1) * h) / (det_g * static_cast<double>(m));
        const double step = std::abs(next - lambda);
        lambda = next;
        if (step <= 8.0 * std::numeric_limits<double>::epsilon() * scale) break;
    }
    // A polish that wandered to a different eigenvalue is worse than none.
    if (std::abs(lambda - lambda0) > 0.05 * (1.0 + std::abs(lambda0))) return lambda0;
    return lambda;
}

std::vector<SpectrumEntry> cluster_multiplicities(const std::vector<Complex>& roots,
                                                  const Matrix<Complex>& a,
                                                  const TolerancePolicy& tol, double root_tol,
                                                  double cluster_tol) {
    if (roots.empty()) return {};
    if (cluster_tol <= 0.0) {
        const CharPoly<Complex> p = charpoly_faddeev(a);
        cluster_tol = std::max(1e-6, 1e3 * root_tol) * cauchy_bound(p);
    }
    std::vector<Complex> sorted = roots;
    std::sort(sorted.begin(), sorted.end(), [](Complex x, Complex y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });

    // Single-linkage merge via union-find; n is tiny.
    const std::size_t n = sorted.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(sorted[i] - sorted[j]) <= cluster_tol) parent[find(i)] = find(j);

    std::vector<SpectrumEntry> out;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (seen[root]) continue;
        seen[root] = true;
        Complex centroid(0.0, 0.0);
        int count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (find(j) == root) {
                centroid += sorted[j];
                ++count;
            }
        }
        centroid /= static_cast<double>(count);
        double radius = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (find(j) == root) radius = std::max(radius, std::abs(sorted[j] - centroid));
        SpectrumEntry entry;
        // The centroid of a multiple-root cluster carries eps^(1/m)-level
        // scatter; sharpen it against the matrix before rank decisions.
        entry.eigenvalue = refine_eigenvalue(a, centroid, count, tol);
        entry.algebraic = count;
        entry.cluster_radius = radius;
        try {
            entry.geometric = geometric_multiplicity(a, entry.eigenvalue, tol);
        } catch (const Error&) {
            // Refinement stalls at defective eigenvalues (the pairing matrix
            // is singular); redo the rank decisions at centroid accuracy.
            const double scale = std::max(1.0, a.max_abs());
            TolerancePolicy loose = tol;
            loose.relative_eps = std::max(
                tol.relative_eps, 100.0 * (radius + 1e-3 * cluster_tol) / scale);
            entry.geometric = geometric_multiplicity(a, entry.eigenvalue, loose);
        }
        out.push_back(entry);
    }
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        return x.eigenvalue.real() != y.eigenvalue.real()
                   ? x.eigenvalue.real() < y.eigenvalue.real()
                   : x.eigenvalue.imag() < y.eigenvalue.imag();
    });
    return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> divs;
    if (v == 0) return divs;
    for (mpz_class d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            mpz_class q = v / d;
            if (q != d) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Deflate p by (x - r); returns true and replaces p when the remainder is 0.
bool deflate_at(std::vector<mpq_class>& coeffs, const mpq_class& r) {
    std::vector<mpq_class> quotient(coeffs.size() - 1);
    mpq_class carry = coeffs.back();
    for (std::size_t m = coeffs.size() - 1; m-- > 0;) {
        quotient[m] = carry;
        carry = coeffs[m] + r * carry;
    }
    if (carry != 0) return false;
    coeffs = std::move(quotient);
    return true;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const CharPoly<RationalComplex>& p) {
    if (p.degree() < 1) return {};
    for (const RationalComplex& c : p.coeffs)
        if (!c.is_real()) return {};

    std::vector<mpq_class> coeffs(p.coeffs.size());
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) coeffs[i] = p.coeffs[i].real();

    std::vector<RationalRoot> out;

    // Zero roots first.
    int zero_mult = 0;
    while (coeffs.size() > 1 && coeffs.front() == 0) {
        coeffs.erase(coeffs.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.push_back({RationalComplex(0), zero_mult});
    if (coeffs.size() < 2) return out;

    // Integerize: candidates p/q, p | trailing, q | leading.
    mpz_class denom_lcm = 1;
    for (const mpq_class& c : coeffs) denom_lcm = lcm(denom_lcm, c.get_den());
    mpq_class trailing_q = coeffs.front() * denom_lcm;
    mpq_class leading_q = coeffs.back() * denom_lcm;
    trailing_q.canonicalize();
    leading_q.canonicalize();
    const mpz_class trailing = trailing_q.get_num();
    const mpz_class leading = leading_q.get_num();

    const auto ps = positive_divisors(trailing);
    const auto qs = positive_divisors(leading);
    for (const mpz_class& num : ps) {
        for (const mpz_class& den : qs) {
            for (int s : {1, -1}) {
                mpq_class cand(s * num, den);
                cand.canonicalize();
                int mult = 0;
                while (coeffs.size() > 1 && deflate_at(coeffs, cand)) ++mult;
                if (mult > 0) out.push_back({RationalComplex(cand), mult});
                if (coeffs.size() < 2) break;
            }
            if (coeffs.size() < 2) break;
        }
        if (coeffs.size() < 2) break;
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) {
        return a.value.real() < b.value.real();
    });
    return out;
}

}  // namespace adjkit
