#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adjkit/compound.hpp"
#include "adjkit/exterior.hpp"
#include "adjkit/io.hpp"
#include "adjkit/recovery.hpp"
#include "adjkit/spectral.hpp"
#include "adjkit/verify.hpp"

namespace py = pybind11;

namespace {

using adjkit::Complex;
using adjkit::ExactMatrix;
using adjkit::FloatMatrix;
using adjkit::RationalComplex;

using Rows = std::vector<std::vector<Complex>>;
using StrRows = std::vector<std::vector<std::string>>;

FloatMatrix to_matrix(const Rows& rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) throw adjkit::ShapeError("matrix must have at least one row");
    const int n = static_cast<int>(rows[0].size());
    std::vector<Complex> data;
    data.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw adjkit::ShapeError("ragged rows in matrix input");
        data.insert(data.end(), row.begin(), row.end());
    }
    return FloatMatrix(m, n, std::move(data));
}

Rows from_matrix(const FloatMatrix& a) {
    Rows rows(static_cast<std::size_t>(a.rows()),
              std::vector<Complex>(static_cast<std::size_t>(a.cols())));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    return rows;
}

ExactMatrix to_exact(const StrRows& rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) throw adjkit::ShapeError("matrix must have at least one row");
    const int n = static_cast<int>(rows[0].size());
    std::vector<RationalComplex> data;
    data.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw adjkit::ShapeError("ragged rows in matrix input");
        for (const auto& s : row) data.push_back(adjkit::parse_rational_complex(s));
    }
    return ExactMatrix(m, n, std::move(data));
}

StrRows from_exact(const ExactMatrix& a) {
    StrRows rows(static_cast<std::size_t>(a.rows()),
                 std::vector<std::string>(static_cast<std::size_t>(a.cols())));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                adjkit::to_string(a(i, j));
    return rows;
}

template <class S>
py::dict recovery_dict(const adjkit::RecoveryResult<S>& r) {
    py::dict d;
    d["multiplicity"] = r.multiplicity;
    d["residual"] = r.residual;
    if constexpr (adjkit::ScalarTraits<S>::is_exact) {
        d["eigenvalue"] = adjkit::to_string(r.eigenvalue);
        d["scale"] = adjkit::to_string(r.scale);
        std::vector<std::string> v, w;
        for (const auto& c : r.v.coords) v.push_back(adjkit::to_string(c));
        for (const auto& c : r.w.coords) w.push_back(adjkit::to_string(c));
        d["v"] = v;
        d["w"] = w;
        d["right_basis"] = from_exact(r.right_basis);
        d["left_basis"] = from_exact(r.left_basis);
    } else {
        d["eigenvalue"] = r.eigenvalue;
        d["scale"] = r.scale;
        d["v"] = r.v.coords;
        d["w"] = r.w.coords;
        d["right_basis"] = from_matrix(r.right_basis);
        d["left_basis"] = from_matrix(r.left_basis);
    }
    return d;
}

constexpr adjkit::TolerancePolicy kPipelineTol{1e-7, 1e-300};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Compound matrices, higher adjugates, wedge algebra and "
              "eigenvector-from-eigenvalue recovery";

    py::register_exception<adjkit::Error>(m, "AdjkitError");

    // Floating kernel: matrices as nested lists of complex numbers.
    m.def(
        "compound",
        [](const Rows& a, int k) { return from_matrix(adjkit::compound(to_matrix(a), k)); },
        py::arg("a"), py::arg("k"), "k-th compound matrix C_k(A)");
    m.def(
        "adjugate",
        [](const Rows& a, int k) {
            return from_matrix(adjkit::higher_adjugate(to_matrix(a), k));
        },
        py::arg("a"), py::arg("k"), "k-th adjugate adj_k(A)");
    m.def(
        "delta_matrix",
        [](int n) { return from_matrix(adjkit::delta_matrix<Complex>(n)); }, py::arg("n"),
        "signed anti-diagonal conjugation matrix");
    m.def(
        "det_sum",
        [](const Rows& a, const Rows& b) {
            return adjkit::det_sum(to_matrix(a), to_matrix(b));
        },
        py::arg("a"), py::arg("b"), "det(A+B) through sum of tr(adj_k(A) C_k(B))");
    m.def(
        "charpoly",
        [](const Rows& a) { return adjkit::charpoly_via_adjugates(to_matrix(a)).coeffs; },
        py::arg("a"), "characteristic polynomial coefficients a_0..a_n");
    m.def(
        "jacobi_derivative",
        [](const Rows& a, Complex lam, int j) {
            return adjkit::jacobi_derivative(to_matrix(a), lam, j);
        },
        py::arg("a"), py::arg("lam"), py::arg("j"),
        "j-th derivative of the characteristic polynomial at lam");
    m.def(
        "eigvals",
        [](const Rows& a, double root_tol) {
            const FloatMatrix mat = to_matrix(a);
            const auto roots = adjkit::aberth_roots(adjkit::charpoly_faddeev(mat), root_tol);
            const auto spectrum =
                adjkit::cluster_multiplicities(roots, mat, kPipelineTol, root_tol);
            py::list out;
            for (const auto& e : spectrum) {
                py::dict d;
                d["eigenvalue"] = e.eigenvalue;
                d["algebraic"] = e.algebraic;
                d["geometric"] = e.geometric;
                d["cluster_radius"] = e.cluster_radius;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("a"), py::arg("root_tol") = 1e-13,
        "clustered eigenvalues with algebraic/geometric multiplicities");
    m.def(
        "geometric_multiplicity",
        [](const Rows& a, Complex lam) {
            return adjkit::geometric_multiplicity(to_matrix(a), lam, kPipelineTol);
        },
        py::arg("a"), py::arg("lam"));
    m.def(
        "eigrecover",
        [](const Rows& a, Complex lam) {
            return recovery_dict(adjkit::recover_wedge(to_matrix(a), lam, kPipelineTol));
        },
        py::arg("a"), py::arg("lam"),
        "rank-1 wedge pairing scale * v * w^T = adj_k(A - lam I)");
    m.def(
        "hermitian_ev_magnitudes",
        [](const Rows& a, double root_tol) {
            return adjkit::hermitian_ev_magnitudes(to_matrix(a), {}, root_tol);
        },
        py::arg("a"), py::arg("root_tol") = 1e-12,
        "squared unit-eigenvector components of a Hermitian matrix");
    m.def(
        "wedge_encode",
        [](const Rows& x) { return adjkit::wedge_encode(to_matrix(x)).coords; }, py::arg("x"),
        "Pluecker coordinates of the wedge of the columns of x");
    m.def(
        "wedge_decode",
        [](const std::vector<Complex>& coords, int n, int k) {
            adjkit::WedgeVector<Complex> p(n, k);
            if (coords.size() != p.coords.size())
                throw adjkit::ShapeError("coordinate count must be C(n, k)");
            p.coords = coords;
            return from_matrix(adjkit::wedge_decode(p));
        },
        py::arg("coords"), py::arg("n"), py::arg("k"),
        "spanning matrix of a decomposable wedge vector");
    m.def(
        "normal_left_from_right",
        [](const std::vector<Complex>& v) {
            std::vector<Complex> out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
            return out;
        },
        py::arg("v"), "left eigenvector of a normal matrix from the right one");

    // Exact kernel: entries as fraction strings ("3", "-1/2", "1/2+3/4i").
    m.def(
        "compound_exact",
        [](const StrRows& a, int k) { return from_exact(adjkit::compound(to_exact(a), k)); },
        py::arg("a"), py::arg("k"));
    m.def(
        "adjugate_exact",
        [](const StrRows& a, int k) {
            return from_exact(adjkit::higher_adjugate(to_exact(a), k));
        },
        py::arg("a"), py::arg("k"));
    m.def(
        "charpoly_exact",
        [](const StrRows& a) {
            std::vector<std::string> out;
            for (const auto& c : adjkit::charpoly_via_adjugates(to_exact(a)).coeffs)
                out.push_back(adjkit::to_string(c));
            return out;
        },
        py::arg("a"));
    m.def(
        "det_sum_exact",
        [](const StrRows& a, const StrRows& b) {
            return adjkit::to_string(adjkit::det_sum(to_exact(a), to_exact(b)));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "eigrecover_exact",
        [](const StrRows& a, const std::string& lam) {
            return recovery_dict(
                adjkit::recover_wedge(to_exact(a), adjkit::parse_rational_complex(lam)));
        },
        py::arg("a"), py::arg("lam"));
    m.def(
        "verify",
        [](int trials, int dim_max, std::uint64_t seed, bool corrupt) {
            adjkit::VerifyOptions opts;
            opts.trials = trials;
            opts.dim_max = dim_max;
            opts.seed = seed;
            opts.corrupt = corrupt;
            const auto rep = adjkit::run_verify(opts);
            py::list idents;
            for (const auto& r : rep.identities) {
                py::dict d;
                d["name"] = r.name;
                d["checks"] = r.checks;
                d["max_residual"] = r.max_residual;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                idents.append(std::move(d));
            }
            py::dict out;
            out["seed"] = rep.seed;
            out["identities"] = std::move(idents);
            out["pass"] = rep.pass();
            return out;
        },
        py::arg("trials") = 10, py::arg("dim_max") = 5, py::arg("seed") = 271828,
        py::arg("corrupt") = false, "run the randomized identity suite");
}
