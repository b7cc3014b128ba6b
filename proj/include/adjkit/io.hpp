#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "adjkit/matrix.hpp"

namespace adjkit {

/// A parsed matrix in whichever scalar kernel the file declared.
using AnyMatrix = std::variant<ExactMatrix, FloatMatrix>;

inline bool is_exact(const AnyMatrix& m) { return std::holds_alternative<ExactMatrix>(m); }

/// Parse a matrix document. Two formats are accepted:
///
///  - JSON: {"mode": "exact"|"float", "rows": m, "cols": n,
///           "entries": [...]} with row-major entries; float entries are
///    [re, im] pairs (a bare number means a real entry), exact entries are
///    strings like "3", "-1/2" or "1/2+3/4i".
///  - plain text: first line "m n", then m lines of n whitespace-separated
///    entries written like "a+bi". Fraction syntax anywhere in the body
///    selects the exact kernel; the exact text writer always emits explicit
///    denominators so text documents round-trip.
AnyMatrix parse_matrix_file(std::istream& in);
AnyMatrix parse_matrix_file(const std::string& path);

/// Canonical JSON document for a matrix (round-trips through
/// parse_matrix_file bit-exactly in both kernels).
std::string serialize_matrix_json(const AnyMatrix& m, int indent = 2);

/// Plain-text document: "m n" header plus one row per line.
std::string serialize_matrix_text(const AnyMatrix& m);

/// Human-readable aligned table of the entries (not a round-trip format).
std::string format_matrix_table(const AnyMatrix& m);

std::string format_scalar(const RationalComplex& v);
std::string format_scalar(const Complex& v);

}  // namespace adjkit
