#include <doctest.h>

#include "adjkit/generate.hpp"
#include "adjkit/spectral.hpp"

using namespace adjkit;

namespace {

RationalComplex rc(long v) { return RationalComplex(v); }

ExactMatrix diag3(long a, long b, long c) {
    ExactMatrix d(3, 3);
    d(0, 0) = rc(a);
    d(1, 1) = rc(b);
    d(2, 2) = rc(c);
    return d;
}

ExactMatrix exact2x2(long a, long b, long c, long d) {
    return ExactMatrix(2, 2, {rc(a), rc(b), rc(c), rc(d)});
}

}  // namespace

TEST_CASE("charpoly_via_adjugates on pinned examples") {
    const auto p = charpoly_via_adjugates(exact2x2(1, 2, 3, 4));
    REQUIRE(p.degree() == 2);
    CHECK(p.coeffs[0] == rc(-2));
    CHECK(p.coeffs[1] == rc(-5));
    CHECK(p.coeffs[2] == rc(1));

    const auto q = charpoly_via_adjugates(diag3(1, 2, 3));
    CHECK(q.coeffs[0] == rc(6));
    CHECK(q.coeffs[1] == rc(-11));
    CHECK(q.coeffs[2] == rc(6));
    CHECK(q.coeffs[3] == rc(-1));

    const auto z = charpoly_via_adjugates(ExactMatrix(3, 3));
    CHECK(z.coeffs[0] == rc(0));
    CHECK(z.coeffs[1] == rc(0));
    CHECK(z.coeffs[2] == rc(0));
    CHECK(z.coeffs[3] == rc(-1));

    CHECK_THROWS_AS(charpoly_via_adjugates(ExactMatrix(2, 3)), DomainError);
}

TEST_CASE("charpoly routes agree exactly on random integer matrices") {
    Rng rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const ExactMatrix a = random_int_matrix(rng, n, n, -5, 5);
        const auto p1 = charpoly_via_adjugates(a);
        const auto p2 = charpoly_faddeev(a);
        REQUIRE(p1.coeffs.size() == p2.coeffs.size());
        for (std::size_t i = 0; i < p1.coeffs.size(); ++i) CHECK(p1.coeffs[i] == p2.coeffs[i]);
    }
}

TEST_CASE("faddeev on the identity gives (1-x)^n") {
    const auto p = charpoly_faddeev(ExactMatrix::identity(4));
    // (1-x)^4 = 1 - 4x + 6x^2 - 4x^3 + x^4
    CHECK(p.coeffs[0] == rc(1));
    CHECK(p.coeffs[1] == rc(-4));
    CHECK(p.coeffs[2] == rc(6));
    CHECK(p.coeffs[3] == rc(-4));
    CHECK(p.coeffs[4] == rc(1));
}

TEST_CASE("jacobi_derivative pinned values") {
    const ExactMatrix d = diag3(1, 2, 3);
    CHECK(jacobi_derivative(d, rc(0), 1) == rc(-11));
    CHECK(jacobi_derivative(d, rc(0), 2) == rc(12));
    CHECK(jacobi_derivative(d, rc(0), 3) == rc(-6));  // (-1)^3 3! = -6
    CHECK_THROWS_AS(jacobi_derivative(d, rc(0), 0), DomainError);
    CHECK_THROWS_AS(jacobi_derivative(d, rc(0), 4), DomainError);
}

TEST_CASE("poly_derivative_eval basics") {
    CharPoly<RationalComplex> p;
    p.coeffs = {rc(-2), rc(-5), rc(1)};
    CHECK(poly_derivative_eval(p, 1, rc(1)) == rc(-3));
    CHECK(poly_derivative_eval(p, 0, rc(2)) == rc(-8));
    CHECK(poly_derivative_eval(p, 3, rc(1)) == rc(0));
    CHECK_THROWS_AS(poly_derivative_eval(p, -1, rc(0)), DomainError);
}

TEST_CASE("jacobi matches polynomial differentiation at random rational points") {
    Rng rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const ExactMatrix a = random_int_matrix(rng, n, n, -5, 5);
        const auto p = charpoly_faddeev(a);
        const RationalComplex lambda =
            rc(static_cast<long>(rng() % 19) - 9) / rc(1 + static_cast<long>(rng() % 4));
        for (int j = 1; j <= n; ++j) {
            CHECK(jacobi_derivative(a, lambda, j) == poly_derivative_eval(p, j, lambda));
        }
    }
}

TEST_CASE("aberth_roots on pinned polynomials") {
    CharPoly<Complex> p;
    p.coeffs = {Complex(2, 0), Complex(-3, 0), Complex(1, 0)};
    auto roots = aberth_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0] - Complex(1, 0)) < 1e-9);
    CHECK(std::abs(roots[1] - Complex(2, 0)) < 1e-9);

    CharPoly<Complex> lin;
    lin.coeffs = {Complex(5, 0), Complex(2, 0)};
    roots = aberth_roots(lin);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0] - Complex(-2.5, 0)) < 1e-14);

    // (1-x)^3: all three roots cluster at 1 with eps^(1/3)-level scatter;
    // the centroid cancels most of it but stays far from eps. Downstream
    // eigenvalue estimates go through refine_eigenvalue for that reason.
    CharPoly<Complex> cube;
    cube.coeffs = {Complex(1, 0), Complex(-3, 0), Complex(3, 0), Complex(-1, 0)};
    roots = aberth_roots(cube, 1e-13);
    REQUIRE(roots.size() == 3);
    Complex centroid(0, 0);
    for (auto r : roots) {
        CHECK(std::abs(r - Complex(1, 0)) < 1e-3);
        centroid += r;
    }
    CHECK(std::abs(centroid / 3.0 - Complex(1, 0)) < 1e-4);

    CHECK_THROWS_AS(aberth_roots(CharPoly<Complex>{{Complex(1, 0)}}), DomainError);
}

TEST_CASE("cluster_multiplicities on pinned spectra") {
    {
        FloatMatrix a(3, 3);
        a(0, 0) = a(1, 1) = Complex(2, 0);
        a(2, 2) = Complex(5, 0);
        const auto roots = aberth_roots(charpoly_faddeev(a), 1e-13);
        const auto spectrum = cluster_multiplicities(roots, a);
        REQUIRE(spectrum.size() == 2);
        CHECK(std::abs(spectrum[0].eigenvalue - Complex(2, 0)) < 1e-8);
        CHECK(spectrum[0].algebraic == 2);
        CHECK(spectrum[0].geometric == 2);
        CHECK(std::abs(spectrum[1].eigenvalue - Complex(5, 0)) < 1e-8);
        CHECK(spectrum[1].algebraic == 1);
        CHECK(spectrum[1].geometric == 1);
    }
    {
        FloatMatrix jordan(2, 2);
        jordan(0, 0) = jordan(1, 1) = Complex(1, 0);
        jordan(0, 1) = Complex(1, 0);
        const auto roots = aberth_roots(charpoly_faddeev(jordan), 1e-13);
        const auto spectrum = cluster_multiplicities(roots, jordan);
        REQUIRE(spectrum.size() == 1);
        CHECK(spectrum[0].algebraic == 2);
        CHECK(spectrum[0].geometric == 1);
    }
    {
        FloatMatrix d(2, 2);
        d(0, 0) = Complex(1, 0);
        d(1, 1) = Complex(2, 0);
        const auto spectrum =
            cluster_multiplicities(aberth_roots(charpoly_faddeev(d), 1e-13), d);
        REQUIRE(spectrum.size() == 2);
        CHECK(spectrum[0].algebraic == 1);
        CHECK(spectrum[1].algebraic == 1);
    }
}

TEST_CASE("geometric_multiplicity via adjugate ranks") {
    ExactMatrix a = diag3(2, 2, 5);
    CHECK(geometric_multiplicity(a, rc(2)) == 2);
    CHECK(geometric_multiplicity(a, rc(5)) == 1);
    CHECK_THROWS_AS(geometric_multiplicity(a, rc(3)), DomainError);

    ExactMatrix jordan = exact2x2(1, 1, 0, 1);
    CHECK(geometric_multiplicity(jordan, rc(1)) == 1);

    const ExactMatrix scaled = ExactMatrix::identity(3) * rc(7);
    CHECK(geometric_multiplicity(scaled, rc(7)) == 3);
}

TEST_CASE("geometric multiplicity agrees with rank-nullity on planted spectra") {
    Rng rng(515151);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const auto ps = planted_spectrum_matrix(rng, n, k);
        CHECK(geometric_multiplicity(ps.a, ps.lambda) == k);
        ExactMatrix b = ps.a;
        for (int i = 0; i < n; ++i) b(i, i) -= ps.lambda;
        CHECK(n - rank(b) == k);
    }
}

TEST_CASE("the full pipeline yields the same spectrum for the transpose") {
    Rng rng(9090);
    const TolerancePolicy pipeline{1e-7, 1e-300};
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const FloatMatrix a = to_float(planted_spectrum_matrix(rng, n, k).a);
        const auto spec_a = cluster_multiplicities(
            aberth_roots(charpoly_faddeev(a), 1e-13), a, pipeline, 1e-13, 0.25);
        const FloatMatrix at = a.transpose();
        const auto spec_at = cluster_multiplicities(
            aberth_roots(charpoly_faddeev(at), 1e-13), at, pipeline, 1e-13, 0.25);
        REQUIRE(spec_a.size() == spec_at.size());
        for (std::size_t i = 0; i < spec_a.size(); ++i) {
            CHECK(std::abs(spec_a[i].eigenvalue - spec_at[i].eigenvalue) < 1e-8);
            CHECK(spec_a[i].algebraic == spec_at[i].algebraic);
            CHECK(spec_a[i].geometric == spec_at[i].geometric);
        }
    }
}

TEST_CASE("rational_roots finds planted integer spectra") {
    const auto p = charpoly_faddeev(diag3(2, 2, 5));
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == rc(2));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value == rc(5));
    CHECK(roots[1].multiplicity == 1);

    // Zero eigenvalue: charpoly has a vanishing constant term.
    const auto q = charpoly_faddeev(diag3(0, 3, 0));
    const auto zroots = rational_roots(q);
    REQUIRE(zroots.size() == 2);
    CHECK(zroots[0].value == rc(0));
    CHECK(zroots[0].multiplicity == 2);
    CHECK(zroots[1].value == rc(3));
}
