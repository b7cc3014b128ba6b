#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adjkit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: grade out of range, size mismatch, non-square input,
/// a scalar outside the expected kernel, or a lambda that is not an eigenvalue.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input exceeds a hard size limit (factorial-cost oracles).
class SizeError : public Error {
public:
    using Error::Error;
};

/// Malformed matrix file. Carries 1-based line/column when known (-1 otherwise).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = -1, int column = -1)
        : Error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Entry count or declared dimensions inconsistent in a matrix file.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An operation that needs a nonzero matrix/vector received (numerically) zero.
class ZeroMatrixError : public Error {
public:
    using Error::Error;
};

/// A rank-1 factorization was requested but the input has rank >= 2.
class RankError : public Error {
public:
    using Error::Error;
};

/// A wedge vector failed the decode/re-encode decomposability check.
class NotDecomposableError : public Error {
public:
    using Error::Error;
};

/// No biorthogonal dual basis exists: the pairing matrix W0^T V is singular.
class BiorthogonalityError : public Error {
public:
    using Error::Error;
};

/// Algebraic multiplicity exceeds geometric multiplicity at the eigenvalue.
class DefectiveEigenvalueError : public Error {
public:
    using Error::Error;
};

/// The requested adjugate grade is below the kernel deficiency (adjugate is zero).
class MultiplicityTooLowError : public Error {
public:
    using Error::Error;
};

/// Two eigenvalues coincide within the clustering tolerance where distinct
/// eigenvalues are required.
class DegenerateSpectrumError : public Error {
public:
    using Error::Error;
};

/// Root finding failed to converge. Carries the best iterate and its residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what,
                     std::vector<std::complex<double>> best_iterate,
                     double residual)
        : Error(what), best_iterate_(std::move(best_iterate)), residual_(residual) {}
    const std::vector<std::complex<double>>& best_iterate() const { return best_iterate_; }
    double residual() const { return residual_; }

private:
    std::vector<std::complex<double>> best_iterate_;
    double residual_;
};

}  // namespace adjkit
