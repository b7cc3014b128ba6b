#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>

#include "adjkit/compound.hpp"
#include "adjkit/exterior.hpp"
#include "adjkit/generate.hpp"
#include "adjkit/io.hpp"
#include "adjkit/recovery.hpp"
#include "adjkit/spectral.hpp"
#include "adjkit/verify.hpp"

namespace {

using adjkit::AnyMatrix;
using adjkit::Complex;
using adjkit::ExactMatrix;
using adjkit::FloatMatrix;
using adjkit::RationalComplex;
using json = nlohmann::json;

std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

template <class S>
json json_scalar(const S& v) {
    if constexpr (adjkit::ScalarTraits<S>::is_exact) {
        return adjkit::to_string(v);
    } else {
        return json::array({v.real(), v.imag()});
    }
}

template <class S>
json json_matrix(const adjkit::Matrix<S>& m) {
    json doc;
    doc["mode"] = adjkit::ScalarTraits<S>::is_exact ? "exact" : "float";
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(json_scalar(m(i, j)));
    doc["entries"] = std::move(entries);
    return doc;
}

template <class S>
json json_wedge(const adjkit::WedgeVector<S>& w) {
    json doc;
    doc["ambient"] = w.ambient;
    doc["grade"] = w.grade;
    json coords = json::array();
    for (const S& c : w.coords) coords.push_back(json_scalar(c));
    doc["coords"] = std::move(coords);
    return doc;
}

template <class S>
AnyMatrix wrap(adjkit::Matrix<S> m) {
    return AnyMatrix(std::move(m));
}

void print_matrix_result(const std::string& head, const AnyMatrix& m, const std::string& format,
                         json extra = {}) {
    if (format == "json") {
        json doc = std::move(extra);
        doc["op"] = head;
        doc["result"] = json::parse(adjkit::serialize_matrix_json(m));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << head << "\n" << adjkit::format_matrix_table(m);
    }
}

// "re,im" decimals in float mode; fraction syntax (optionally "re,im") in
// exact mode.
RationalComplex parse_lambda_exact(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return adjkit::parse_rational_complex(text);
    const RationalComplex re = adjkit::parse_rational_complex(text.substr(0, comma));
    const RationalComplex im = adjkit::parse_rational_complex(text.substr(comma + 1));
    if (!re.is_real() || !im.is_real())
        throw adjkit::ParseError("--lambda: expected 're,im' with real components");
    return RationalComplex(re.real(), im.real());
}

Complex parse_lambda_float(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return adjkit::parse_float_complex(text);
    const Complex re = adjkit::parse_float_complex(text.substr(0, comma));
    const Complex im = adjkit::parse_float_complex(text.substr(comma + 1));
    if (re.imag() != 0.0 || im.imag() != 0.0)
        throw adjkit::ParseError("--lambda: expected 're,im' with real components");
    return Complex(re.real(), im.real());
}

template <class S>
json recovery_to_json(const adjkit::RecoveryResult<S>& r) {
    json doc;
    doc["eigenvalue"] = json_scalar(r.eigenvalue);
    doc["multiplicity"] = r.multiplicity;
    doc["scale"] = json_scalar(r.scale);
    doc["v"] = json_wedge(r.v);
    doc["w"] = json_wedge(r.w);
    doc["right_basis"] = json_matrix(r.right_basis);
    doc["left_basis"] = json_matrix(r.left_basis);
    doc["residual"] = double_str(r.residual);
    return doc;
}

template <class S>
void print_recovery_table(const adjkit::RecoveryResult<S>& r) {
    std::cout << "eigenvalue   " << adjkit::to_string(r.eigenvalue) << "\n";
    std::cout << "multiplicity " << r.multiplicity << "\n";
    std::cout << "scale        " << adjkit::to_string(r.scale) << "  (= (-1)^k P^(k)(lambda)/k!)"
              << "\n";
    std::cout << "v (wedge)   ";
    for (const auto& c : r.v.coords) std::cout << " " << adjkit::to_string(c);
    std::cout << "\nw (wedge)   ";
    for (const auto& c : r.w.coords) std::cout << " " << adjkit::to_string(c);
    std::cout << "\nright basis (columns span ker(A - lambda I))\n"
              << adjkit::format_matrix_table(wrap(r.right_basis));
    std::cout << "left basis (columns span ker(A - lambda I)^T)\n"
              << adjkit::format_matrix_table(wrap(r.left_basis));
    std::cout << "max residual " << double_str(r.residual) << "\n";
}

int emit_verify_report(const adjkit::VerifyReport& rep, const std::string& format) {
    if (format == "json") {
        json doc;
        doc["op"] = "verify";
        doc["seed"] = rep.seed;
        doc["trials"] = rep.trials;
        doc["corrupt"] = rep.corrupt;
        json idents = json::array();
        for (const auto& r : rep.identities) {
            json e;
            e["name"] = r.name;
            e["checks"] = r.checks;
            e["max_residual"] = double_str(r.max_residual);
            e["tolerance"] = double_str(r.tolerance);
            e["pass"] = r.pass;
            if (!r.note.empty()) e["note"] = r.note;
            idents.push_back(std::move(e));
        }
        doc["identities"] = std::move(idents);
        doc["pass"] = rep.pass();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::printf("verify: seed=%llu trials=%d%s\n",
                    static_cast<unsigned long long>(rep.seed), rep.trials,
                    rep.corrupt ? " (corrupted control)" : "");
        for (const auto& r : rep.identities) {
            std::printf("  %-26s %5d checks  max residual %-12.5g tol %-9.3g %s%s%s\n",
                        r.name.c_str(), r.checks, r.max_residual, r.tolerance,
                        r.pass ? "ok" : "FAIL", r.note.empty() ? "" : "  ",
                        r.note.c_str());
        }
        std::printf("verify: %s\n", rep.pass() ? "all identities within tolerance" : "FAILURES");
    }
    return rep.pass() ? 0 : 1;
}

struct CommonOpts {
    std::string file;
    std::string format = "table";
    int k = 1;
    std::string lambda;
    bool auto_lambda = false;
    double root_tol = 1e-13;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compound matrices, higher adjugates, wedge algebra and "
                 "eigenvector-from-eigenvalue recovery"};
    app.require_subcommand(1);
    CommonOpts opt;
    adjkit::VerifyOptions vopt;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
    };
    const auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "Matrix document (JSON or text; '-' for stdin)")
            ->required();
    };

    CLI::App* c_compound = app.add_subcommand("compound", "k-th compound matrix C_k(A)");
    c_compound->add_option("-k", opt.k, "Grade")->required();
    add_file(c_compound);
    add_format(c_compound);

    CLI::App* c_adjugate = app.add_subcommand("adjugate", "k-th adjugate adj_k(A)");
    c_adjugate->add_option("-k", opt.k, "Grade")->required();
    add_file(c_adjugate);
    add_format(c_adjugate);

    CLI::App* c_charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial via adjugate traces");
    add_file(c_charpoly);
    add_format(c_charpoly);

    CLI::App* c_eigvals = app.add_subcommand("eigvals", "eigenvalues with multiplicities");
    add_file(c_eigvals);
    add_format(c_eigvals);
    c_eigvals->add_option("--root-tol", opt.root_tol, "Root-finder stopping tolerance");

    CLI::App* c_recover =
        app.add_subcommand("eigrecover", "recover the rank-1 wedge pairing at an eigenvalue");
    add_file(c_recover);
    add_format(c_recover);
    c_recover->add_option("--lambda", opt.lambda,
                          "Eigenvalue ('re,im' decimals in float mode, fractions in exact mode)");
    c_recover->add_flag("--auto", opt.auto_lambda, "Recover at every detected eigenvalue");
    c_recover->add_option("--root-tol", opt.root_tol, "Root-finder stopping tolerance");

    CLI::App* c_hermitian =
        app.add_subcommand("hermitian-ev", "squared eigenvector components of a Hermitian matrix");
    add_file(c_hermitian);
    add_format(c_hermitian);
    c_hermitian->add_option("--root-tol", opt.root_tol, "Root-finder stopping tolerance");

    CLI::App* c_verify = app.add_subcommand("verify", "run the identity suite");
    c_verify->add_option("file", opt.file, "Optional matrix document to pin the suite to");
    add_format(c_verify);
    c_verify->add_option("--trials", vopt.trials, "Number of random trials");
    c_verify->add_option("--dim-max", vopt.dim_max, "Largest matrix dimension");
    c_verify->add_option("--seed", vopt.seed, "Random seed");
    c_verify->add_flag("--corrupt", vopt.corrupt,
                       "Negative control: perturb one entry of each matrix post-construction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_compound->parsed() || c_adjugate->parsed()) {
            const bool is_compound = c_compound->parsed();
            const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
            const AnyMatrix result = std::visit(
                [&](const auto& a) {
                    return is_compound ? wrap(adjkit::compound(a, opt.k))
                                       : wrap(adjkit::higher_adjugate(a, opt.k));
                },
                m);
            json extra;
            extra["k"] = opt.k;
            print_matrix_result(is_compound ? "compound" : "adjugate", result, opt.format,
                                std::move(extra));
            return 0;
        }

        if (c_charpoly->parsed()) {
            const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
            std::visit(
                [&](const auto& a) {
                    const auto p = adjkit::charpoly_via_adjugates(a);
                    if (opt.format == "json") {
                        json doc;
                        doc["op"] = "charpoly";
                        doc["degree"] = p.degree();
                        json coeffs = json::array();
                        for (const auto& c : p.coeffs) coeffs.push_back(json_scalar(c));
                        doc["coefficients"] = std::move(coeffs);
                        std::cout << doc.dump(2) << "\n";
                    } else {
                        std::cout << "P(x) = det(A - x I), coefficients a_0..a_n:\n";
                        for (int k = 0; k <= p.degree(); ++k)
                            std::cout << "  a_" << k << " = "
                                      << adjkit::to_string(p.coeffs[static_cast<std::size_t>(k)])
                                      << "\n";
                    }
                },
                m);
            return 0;
        }

        if (c_eigvals->parsed()) {
            const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
            if (adjkit::is_exact(m)) {
                const ExactMatrix& a = std::get<ExactMatrix>(m);
                const auto roots = adjkit::rational_roots(adjkit::charpoly_faddeev(a));
                int total = 0;
                for (const auto& r : roots) total += r.multiplicity;
                const bool complete = total == a.rows();
                if (opt.format == "json") {
                    json doc;
                    doc["op"] = "eigvals";
                    doc["mode"] = "exact";
                    doc["complete"] = complete;
                    json list = json::array();
                    for (const auto& r : roots) {
                        json e;
                        e["eigenvalue"] = json_scalar(r.value);
                        e["algebraic"] = r.multiplicity;
                        e["geometric"] = adjkit::geometric_multiplicity(a, r.value);
                        list.push_back(std::move(e));
                    }
                    doc["spectrum"] = std::move(list);
                    std::cout << doc.dump(2) << "\n";
                } else {
                    std::cout << "rational eigenvalues ("
                              << (complete ? "complete spectrum" : "spectrum incomplete; "
                                                                   "irrational roots remain")
                              << ")\n";
                    for (const auto& r : roots)
                        std::cout << "  " << adjkit::to_string(r.value) << "  alg "
                                  << r.multiplicity << "  geo "
                                  << adjkit::geometric_multiplicity(a, r.value) << "\n";
                }
                return 0;
            }
            const FloatMatrix& a = std::get<FloatMatrix>(m);
            const auto roots = adjkit::aberth_roots(adjkit::charpoly_faddeev(a), opt.root_tol);
            const adjkit::TolerancePolicy pipeline{1e-7, 1e-300};
            const auto spectrum =
                adjkit::cluster_multiplicities(roots, a, pipeline, opt.root_tol);
            if (opt.format == "json") {
                json doc;
                doc["op"] = "eigvals";
                doc["mode"] = "float";
                json list = json::array();
                for (const auto& e : spectrum) {
                    json entry;
                    entry["eigenvalue"] =
                        json::array({e.eigenvalue.real(), e.eigenvalue.imag()});
                    entry["algebraic"] = e.algebraic;
                    entry["geometric"] = e.geometric;
                    entry["cluster_radius"] = double_str(e.cluster_radius);
                    list.push_back(std::move(entry));
                }
                doc["spectrum"] = std::move(list);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "eigenvalues (clustered)\n";
                for (const auto& e : spectrum)
                    std::cout << "  " << adjkit::to_string(e.eigenvalue) << "  alg "
                              << e.algebraic << "  geo " << e.geometric << "  radius "
                              << double_str(e.cluster_radius) << "\n";
            }
            return 0;
        }

        if (c_recover->parsed()) {
            if (opt.lambda.empty() == !opt.auto_lambda) {
                std::cerr << "eigrecover: pass exactly one of --lambda or --auto\n";
                return 2;
            }
            const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
            if (adjkit::is_exact(m)) {
                const ExactMatrix& a = std::get<ExactMatrix>(m);
                std::vector<RationalComplex> lambdas;
                if (opt.auto_lambda) {
                    for (const auto& r : adjkit::rational_roots(adjkit::charpoly_faddeev(a)))
                        lambdas.push_back(r.value);
                    if (lambdas.empty())
                        throw adjkit::DomainError(
                            "eigrecover --auto: no rational eigenvalues found; exact mode "
                            "needs --lambda");
                } else {
                    lambdas.push_back(parse_lambda_exact(opt.lambda));
                }
                json out = json::array();
                for (const auto& lambda : lambdas) {
                    const auto r = adjkit::recover_wedge(a, lambda);
                    if (opt.format == "json")
                        out.push_back(recovery_to_json(r));
                    else
                        print_recovery_table(r);
                }
                if (opt.format == "json") {
                    json doc;
                    doc["op"] = "eigrecover";
                    doc["results"] = std::move(out);
                    std::cout << doc.dump(2) << "\n";
                }
                return 0;
            }
            const FloatMatrix& a = std::get<FloatMatrix>(m);
            const adjkit::TolerancePolicy pipeline{1e-7, 1e-300};
            std::vector<Complex> lambdas;
            if (opt.auto_lambda) {
                const auto roots =
                    adjkit::aberth_roots(adjkit::charpoly_faddeev(a), opt.root_tol);
                for (const auto& e :
                     adjkit::cluster_multiplicities(roots, a, pipeline, opt.root_tol))
                    lambdas.push_back(e.eigenvalue);
            } else {
                lambdas.push_back(parse_lambda_float(opt.lambda));
            }
            json out = json::array();
            for (const Complex& lambda : lambdas) {
                const auto r = adjkit::recover_wedge(a, lambda, pipeline);
                if (opt.format == "json")
                    out.push_back(recovery_to_json(r));
                else
                    print_recovery_table(r);
            }
            if (opt.format == "json") {
                json doc;
                doc["op"] = "eigrecover";
                doc["results"] = std::move(out);
                std::cout << doc.dump(2) << "\n";
            }
            return 0;
        }

        if (c_hermitian->parsed()) {
            const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
            FloatMatrix a(1, 1);
            if (adjkit::is_exact(m)) {
                a = adjkit::to_float(std::get<ExactMatrix>(m));
            } else {
                a = std::get<FloatMatrix>(m);
            }
            const auto table = adjkit::hermitian_ev_magnitudes(a, {}, opt.root_tol);
            if (opt.format == "json") {
                json doc;
                doc["op"] = "hermitian-ev";
                json rows = json::array();
                for (const auto& row : table) {
                    json r = json::array();
                    for (double v : row) r.push_back(v);
                    rows.push_back(std::move(r));
                }
                doc["magnitudes_squared"] = std::move(rows);
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "|v_{i,j}|^2 (row i: eigenvalue ascending; column j: component)\n";
                for (const auto& row : table) {
                    for (double v : row) std::printf("  %#12.10g", v);
                    std::printf("\n");
                }
            }
            return 0;
        }

        if (c_verify->parsed()) {
            adjkit::VerifyReport rep;
            if (!opt.file.empty()) {
                const AnyMatrix m = adjkit::parse_matrix_file(opt.file);
                rep = adjkit::run_verify_on(m, vopt);
            } else {
                rep = adjkit::run_verify(vopt);
            }
            return emit_verify_report(rep, opt.format);
        }
    } catch (const adjkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
