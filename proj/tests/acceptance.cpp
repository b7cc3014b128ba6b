// Acceptance suite: every release criterion runs here, one pass/fail line
// each. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "adjkit/compound.hpp"
#include "adjkit/exterior.hpp"
#include "adjkit/generate.hpp"
#include "adjkit/recovery.hpp"
#include "adjkit/verify.hpp"
#include "oracle_eigen.hpp"

using namespace adjkit;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %-28s %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// 1. Exact identity suite on >= 200 seeded integer matrices, all grades.
void criterion_exact_identities() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    int checked = 0;
    bool ok = true;
    std::string why;
    for (int t = 0; t < 200 && ok; ++t) {
        const int n = 1 + t % 5;
        const ExactMatrix a = random_int_matrix(rng, n, n, -5, 5);
        const ExactMatrix b = random_int_matrix(rng, n, n, -5, 5);
        const ExactMatrix ab = a * b;
        const RationalComplex d = det_laplace(a);
        for (int k = 0; k <= n && ok; ++k) {
            const ExactMatrix ck_a = compound(a, k);
            const ExactMatrix adjk_a = higher_adjugate(a, k);
            const ExactMatrix det_i =
                ExactMatrix::identity(static_cast<int>(binomial(n, k))) * d;
            if (!(compound(ab, k) == ck_a * compound(b, k))) {
                ok = false;
                why = "compound multiplicativity";
            } else if (!(ck_a * adjk_a == det_i) || !(adjk_a * ck_a == det_i)) {
                ok = false;
                why = "product law (det A to the first power)";
            } else if (!(higher_adjugate(ab, k) ==
                         higher_adjugate(b, k) * higher_adjugate(a, k))) {
                ok = false;
                why = "adjugate reversal";
            }
        }
        if (ok && !(det_sum(a, b) == det_laplace(a + b))) {
            ok = false;
            why = "determinant-of-sum expansion";
        }
        if (ok) {
            const auto p1 = charpoly_via_adjugates(a);
            const auto p2 = charpoly_faddeev(a);
            for (std::size_t i = 0; i < p1.coeffs.size(); ++i)
                if (!(p1.coeffs[i] == p2.coeffs[i])) {
                    ok = false;
                    why = "charpoly route disagreement";
                }
        }
        ++checked;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= 60.0) {
        ok = false;
        why = "runtime budget exceeded";
    }
    report(1, "exact identity suite", ok,
           ok ? fmt("%d matrices, all residuals identically zero, %.1fs", checked, secs)
              : why);
}

// 2. Jacobi derivative formula, exact and floating.
void criterion_jacobi() {
    Rng rng(1002);
    bool ok = true;
    std::string why;
    double worst_rel = 0.0;
    for (int t = 0; t < 200 && ok; ++t) {
        const int n = 1 + t % 5;
        const ExactMatrix a = random_int_matrix(rng, n, n, -5, 5);
        const auto p = charpoly_faddeev(a);
        const FloatMatrix af = to_float(a);
        const auto pf = charpoly_faddeev(af);
        for (int rep = 0; rep < 10 && ok; ++rep) {
            const RationalComplex lambda =
                RationalComplex(static_cast<long>(rng() % 19) - 9) /
                RationalComplex(1 + static_cast<long>(rng() % 4));
            for (int j = 1; j <= n && ok; ++j) {
                if (!(jacobi_derivative(a, lambda, j) == poly_derivative_eval(p, j, lambda))) {
                    ok = false;
                    why = "exact disagreement";
                }
                const Complex d1 = jacobi_derivative(af, lambda.to_complex(), j);
                const Complex d2 = poly_derivative_eval(pf, j, lambda.to_complex());
                const double rel =
                    std::abs(d1 - d2) / std::max({std::abs(d1), std::abs(d2), 1.0});
                worst_rel = std::max(worst_rel, rel);
                if (rel > 1e-9) {
                    ok = false;
                    why = fmt("float relative residual %.3g > 1e-9", rel);
                }
            }
        }
    }
    report(2, "jacobi derivative formula", ok,
           ok ? fmt("200 matrices x 10 lambdas, exact zero, float worst %.2e", worst_rel) : why);
}

// 3. Rank lemma on planted-rank matrices, every deficiency.
void criterion_rank_lemma() {
    Rng rng(1003);
    bool ok = true;
    std::string why;
    int checked = 0;
    for (int n = 2; n <= 6 && ok; ++n) {
        for (int deficiency = 1; deficiency <= n - 1 && ok; ++deficiency) {
            for (int rep = 0; rep < 4 && ok; ++rep) {
                const ExactMatrix a = planted_rank_matrix(rng, n, n - deficiency);
                for (int j = 1; j <= n - 1 && ok; ++j) {
                    const ExactMatrix adj_j = higher_adjugate(a, j);
                    if (j < deficiency) {
                        if (adj_j.max_abs() != 0.0) {
                            ok = false;
                            why = fmt("adj_%d != 0 below deficiency %d (n=%d)", j, deficiency, n);
                        }
                    } else if (rank(adj_j) != binomial(n - deficiency, n - j)) {
                        ok = false;
                        why = fmt("rank adj_%d wrong (n=%d, deficiency %d)", j, n, deficiency);
                    }
                }
                ++checked;
            }
        }
    }
    report(3, "rank lemma", ok, ok ? fmt("%d planted-rank matrices, exact", checked) : why);
}

// 4. Main identity on planted similarity transforms, exact and floating.
void criterion_main_theorem() {
    Rng rng(1004);
    bool ok = true;
    std::string why;
    int checked = 0;
    double worst_rel = 0.0;
    const TolerancePolicy pipeline{1e-7, 1e-300};
    for (int t = 0; t < 100 && ok; ++t) {
        const int n = 2 + t % 5;
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const PlantedSpectrum ps = planted_spectrum_matrix(rng, n, k);

        // Exact half: identity and pairing hold with zero residual.
        try {
            const auto r = recover_wedge(ps.a, ps.lambda);
            if (r.multiplicity != k || r.residual != 0.0 ||
                !(wedge_pairing(r.w, r.v) == RationalComplex(1))) {
                ok = false;
                why = fmt("exact identity violated (n=%d k=%d)", n, k);
            }
        } catch (const Error& e) {
            ok = false;
            why = fmt("exact recovery threw: %s", e.what());
        }
        if (!ok) break;

        // Floating half: eigenvalue from the root finder, clustered.
        try {
            const FloatMatrix af = to_float(ps.a);
            const auto roots = aberth_roots(charpoly_faddeev(af), 1e-13);
            // Planted spectra have integer gaps; a quarter-unit linkage both
            // merges any realistic cluster scatter and never bridges a gap.
            const auto spectrum = cluster_multiplicities(roots, af, pipeline, 1e-13, 0.25);
            const Complex target = ps.lambda.to_complex();
            const SpectrumEntry* best = nullptr;
            for (const auto& e : spectrum)
                if (!best ||
                    std::abs(e.eigenvalue - target) < std::abs(best->eigenvalue - target))
                    best = &e;
            const auto rep = verify_theorem(af, best->eigenvalue, pipeline);
            FloatMatrix b = af;
            for (int i = 0; i < n; ++i) b(i, i) -= best->eigenvalue;
            const double mscale =
                std::max(higher_adjugate(b, rep.multiplicity).max_abs(), 1e-30);
            const double kernel_scale = std::max(1.0, b.max_abs());
            const double rel = std::max({rep.identity_residual / mscale, rep.pairing_residual,
                                         rep.right_kernel_residual / kernel_scale,
                                         rep.left_kernel_residual / kernel_scale});
            worst_rel = std::max(worst_rel, rel);
            if (rep.multiplicity != k || rel > 1e-8) {
                ok = false;
                why = fmt("float residual %.3g > 1e-8 (n=%d k=%d)", rel, n, k);
            }
        } catch (const Error& e) {
            ok = false;
            why = fmt("float recovery threw: %s (n=%d k=%d)", e.what(), n, k);
        }
        ++checked;
    }
    report(4, "main rank-1 wedge identity", ok,
           ok ? fmt("%d planted matrices, exact zero, float worst %.2e", checked, worst_rel)
              : why);
}

// 5. Defective eigenvalues are detected, never silently recovered.
void criterion_defective() {
    Rng rng(1005);
    bool ok = true;
    std::string why;
    int checked = 0;
    for (int n = 2; n <= 5 && ok; ++n) {
        for (int block = 2; block <= n && ok; ++block) {
            for (int rep = 0; rep < 5 && ok; ++rep) {
                const PlantedJordan pj = jordan_embedded_matrix(rng, n, block);
                const int g = geometric_multiplicity(pj.a, pj.lambda);
                ExactMatrix b = pj.a;
                for (int i = 0; i < n; ++i) b(i, i) -= pj.lambda;
                if (!trace(higher_adjugate(b, g)).is_zero()) {
                    ok = false;
                    why = fmt("tr adj_%d did not vanish (n=%d block=%d)", g, n, block);
                    break;
                }
                bool threw = false;
                try {
                    (void)recover_wedge(pj.a, pj.lambda);
                } catch (const DefectiveEigenvalueError&) {
                    threw = true;
                }
                if (!threw) {
                    ok = false;
                    why = fmt("recovery returned for a Jordan block (n=%d block=%d)", n, block);
                }
                ++checked;
            }
        }
    }
    report(5, "defective detection", ok,
           ok ? fmt("%d embedded Jordan blocks, all rejected", checked) : why);
}

// 6. Hermitian eigenvector-magnitude identity against the direct oracle.
void criterion_hermitian() {
    Rng rng(1006);
    bool ok = true;
    std::string why;
    int accepted = 0;
    double worst_entry = 0.0, worst_row = 0.0;
    int attempts = 0;
    while (accepted < 100 && attempts < 4000 && ok) {
        ++attempts;
        const int n = 2 + accepted % 7;
        const bool complex_entries = accepted % 2 == 1;
        const FloatMatrix a = random_hermitian(rng, n, complex_entries);
        const auto oracle = testing::hermitian_eigendecomposition(a);
        if (testing::min_eigenvalue_gap(oracle) < 1e-3) continue;
        try {
            const auto table = hermitian_ev_magnitudes(a, {}, 1e-13);
            for (int i = 0; i < n; ++i) {
                double row_sum = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double got =
                        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    const double want =
                        oracle.magnitude_sq[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)];
                    worst_entry = std::max(worst_entry, std::abs(got - want));
                    row_sum += got;
                }
                worst_row = std::max(worst_row, std::abs(row_sum - 1.0));
            }
            if (worst_entry > 1e-8) {
                ok = false;
                why = fmt("entry residual %.3g > 1e-8 (n=%d)", worst_entry, n);
            } else if (worst_row > 1e-10) {
                ok = false;
                why = fmt("row sum residual %.3g > 1e-10 (n=%d)", worst_row, n);
            }
            ++accepted;
        } catch (const Error& e) {
            ok = false;
            why = fmt("hermitian table threw: %s (n=%d)", e.what(), n);
        }
    }
    if (ok && accepted < 100) {
        ok = false;
        why = "could not draw 100 well-separated Hermitian samples";
    }
    report(6, "hermitian magnitude identity", ok,
           ok ? fmt("%d matrices, worst entry %.2e, worst row sum %.2e", accepted, worst_entry,
                    worst_row)
              : why);
}

// 7. Wedge encode/decode/encode is a fixed point, exactly.
void criterion_wedge_roundtrip() {
    Rng rng(1007);
    bool ok = true;
    std::string why;
    int checked = 0;
    for (int n = 1; n <= 6 && ok; ++n) {
        for (int k = 1; k <= std::min(3, n) && ok; ++k) {
            int done = 0;
            int guard = 0;
            while (done < 10 && guard < 200 && ok) {
                ++guard;
                const ExactMatrix x = random_int_matrix(rng, n, k, -5, 5);
                const auto p = wedge_encode(x);
                bool zero = true;
                for (const auto& c : p.coords) zero = zero && c.is_zero();
                if (zero) continue;
                const ExactMatrix v = wedge_decode(p);
                if (!(wedge_encode(v) == p)) {
                    ok = false;
                    why = fmt("round trip broke at n=%d k=%d", n, k);
                }
                ++done;
                ++checked;
            }
        }
    }
    report(7, "wedge round trip", ok, ok ? fmt("%d decomposables, exact fixed point", checked) : why);
}

// 8. Geometric multiplicity: adjugate-rank route vs rank-nullity.
void criterion_multiplicity_agreement() {
    bool ok = true;
    std::string why;
    int checked = 0;
    {
        Rng rng(1004);  // same family as criterion 4
        for (int t = 0; t < 100 && ok; ++t) {
            const int n = 2 + t % 5;
            const int k = 1 + static_cast<int>(rng() % (n - 1));
            const PlantedSpectrum ps = planted_spectrum_matrix(rng, n, k);
            ExactMatrix b = ps.a;
            for (int i = 0; i < n; ++i) b(i, i) -= ps.lambda;
            if (geometric_multiplicity(ps.a, ps.lambda) != n - rank(b)) {
                ok = false;
                why = fmt("disagreement on planted spectrum (n=%d k=%d)", n, k);
            }
            ++checked;
        }
    }
    {
        Rng rng(1005);  // same family as criterion 5
        for (int n = 2; n <= 5 && ok; ++n) {
            for (int block = 2; block <= n && ok; ++block) {
                for (int rep = 0; rep < 5 && ok; ++rep) {
                    const PlantedJordan pj = jordan_embedded_matrix(rng, n, block);
                    ExactMatrix b = pj.a;
                    for (int i = 0; i < n; ++i) b(i, i) -= pj.lambda;
                    if (geometric_multiplicity(pj.a, pj.lambda) != n - rank(b)) {
                        ok = false;
                        why = fmt("disagreement on Jordan family (n=%d)", n);
                    }
                    ++checked;
                }
            }
        }
    }
    report(8, "multiplicity detection", ok,
           ok ? fmt("%d matrices, adjugate route == rank-nullity", checked) : why);
}

// 9. CLI verify: clean run exits 0, corrupted control exits 1.
void criterion_cli() {
    const std::string base = std::string(ADJKIT_CLI_PATH) +
                             " verify --trials 4 --dim-max 4 --seed 4242 "
                             ">/tmp/adjkit_acceptance_cli.out 2>&1";
    const int clean = std::system(base.c_str());
    const std::string corrupt_cmd = std::string(ADJKIT_CLI_PATH) +
                                    " verify --trials 4 --dim-max 4 --seed 4242 --corrupt "
                                    ">/tmp/adjkit_acceptance_cli_corrupt.out 2>&1";
    const int corrupt = std::system(corrupt_cmd.c_str());
    const int clean_code = WIFEXITED(clean) ? WEXITSTATUS(clean) : -1;
    const int corrupt_code = WIFEXITED(corrupt) ? WEXITSTATUS(corrupt) : -1;
    const bool ok = clean_code == 0 && corrupt_code == 1;
    report(9, "cli verify", ok,
           fmt("clean exit %d (want 0), corrupted exit %d (want 1)", clean_code, corrupt_code));
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_exact_identities();
    criterion_jacobi();
    criterion_rank_lemma();
    criterion_main_theorem();
    criterion_defective();
    criterion_hermitian();
    criterion_wedge_roundtrip();
    criterion_multiplicity_agreement();
    criterion_cli();
    std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED",
                failures, failures == 1 ? "" : "s");
    return failures;
}
