#include "adjkit/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace adjkit {

namespace {

using nlohmann::json;

int require_positive_dim(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw ParseError(std::string("matrix document: missing integer field '") + key + "'");
    const int v = doc[key].get<int>();
    if (v < 1) throw ShapeError(std::string("matrix document: '") + key + "' must be >= 1");
    return v;
}

AnyMatrix parse_json_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("matrix document: expected a JSON object");
    const std::string mode = doc.value("mode", std::string());
    if (mode != "exact" && mode != "float")
        throw ParseError("matrix document: 'mode' must be \"exact\" or \"float\"");
    const int rows = require_positive_dim(doc, "rows");
    const int cols = require_positive_dim(doc, "cols");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError("matrix document: missing 'entries' array");
    const json& entries = doc["entries"];
    if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ShapeError("matrix document: entry count does not match rows*cols");

    if (mode == "exact") {
        std::vector<RationalComplex> data;
        data.reserve(entries.size());
        for (const json& e : entries) {
            if (!e.is_string())
                throw ParseError("matrix document: exact entries must be strings");
            data.push_back(parse_rational_complex(e.get<std::string>()));
        }
        return ExactMatrix(rows, cols, std::move(data));
    }
    std::vector<Complex> data;
    data.reserve(entries.size());
    for (const json& e : entries) {
        if (e.is_number()) {
            data.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            data.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw ParseError("matrix document: float entries must be [re, im] pairs");
        }
    }
    return FloatMatrix(rows, cols, std::move(data));
}

AnyMatrix parse_text_document(const std::string& text) {
    std::istringstream in(text);
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ParseError("text matrix: expected header line 'm n'", 1);
    if (rows < 1 || cols < 1) throw ShapeError("text matrix: dimensions must be >= 1");
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ShapeError("text matrix: entry count does not match header dimensions");
    bool exact = false;
    for (const std::string& t : tokens) {
        if (t.find('/') != std::string::npos) {
            exact = true;
            break;
        }
    }
    if (exact) {
        std::vector<RationalComplex> data;
        data.reserve(tokens.size());
        for (const std::string& t : tokens) data.push_back(parse_rational_complex(t));
        return ExactMatrix(rows, cols, std::move(data));
    }
    std::vector<Complex> data;
    data.reserve(tokens.size());
    for (const std::string& t : tokens) data.push_back(parse_float_complex(t));
    return FloatMatrix(rows, cols, std::move(data));
}

// "p/q" with the denominator always explicit, so that text documents
// re-parse into the exact kernel.
std::string rational_explicit(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string exact_text_entry(const RationalComplex& v) {
    if (v.imag() == 0) return rational_explicit(v.real());
    const std::string im = rational_explicit(abs(v.imag())) + "i";
    const std::string sign = v.imag() < 0 ? "-" : "+";
    if (v.real() == 0) return (v.imag() < 0 ? "-" : "") + im;
    return rational_explicit(v.real()) + sign + im;
}

}  // namespace

AnyMatrix parse_matrix_file(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix document");
    if (text[first] == '{') return parse_json_document(text);
    return parse_text_document(text);
}

AnyMatrix parse_matrix_file(const std::string& path) {
    if (path == "-") return parse_matrix_file(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return parse_matrix_file(in);
}

std::string serialize_matrix_json(const AnyMatrix& m, int indent) {
    json doc;
    if (is_exact(m)) {
        const ExactMatrix& a = std::get<ExactMatrix>(m);
        doc["mode"] = "exact";
        doc["rows"] = a.rows();
        doc["cols"] = a.cols();
        json entries = json::array();
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) entries.push_back(to_string(a(i, j)));
        doc["entries"] = std::move(entries);
    } else {
        const FloatMatrix& a = std::get<FloatMatrix>(m);
        doc["mode"] = "float";
        doc["rows"] = a.rows();
        doc["cols"] = a.cols();
        json entries = json::array();
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                entries.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
        doc["entries"] = std::move(entries);
    }
    return doc.dump(indent);
}

std::string serialize_matrix_text(const AnyMatrix& m) {
    std::ostringstream out;
    if (is_exact(m)) {
        const ExactMatrix& a = std::get<ExactMatrix>(m);
        out << a.rows() << " " << a.cols() << "\n";
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                if (j) out << " ";
                out << exact_text_entry(a(i, j));
            }
            out << "\n";
        }
    } else {
        const FloatMatrix& a = std::get<FloatMatrix>(m);
        out << a.rows() << " " << a.cols() << "\n";
        for (int i = 0; i < a.rows(); ++i) {
            for (int j = 0; j < a.cols(); ++j) {
                if (j) out << " ";
                out << to_string(a(i, j));
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string format_scalar(const RationalComplex& v) { return to_string(v); }
std::string format_scalar(const Complex& v) {
    // Shorter form for tables; serialization uses the full-precision writer.
    char buf[64];
    if (v.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.10g", v.real());
        return buf;
    }
    std::string out;
    if (v.real() != 0.0) {
        std::snprintf(buf, sizeof(buf), "%.10g", v.real());
        out = buf;
        out += v.imag() < 0 ? "-" : "+";
    } else if (v.imag() < 0) {
        out = "-";
    }
    std::snprintf(buf, sizeof(buf), "%.10g", std::abs(v.imag()));
    out += buf;
    out += "i";
    return out;
}

namespace {

template <class S>
std::string table_of(const Matrix<S>& a) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
    std::size_t width = 1;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            cells.push_back(format_scalar(a(i, j)));
            width = std::max(width, cells.back().size());
        }
    }
    std::ostringstream out;
    for (int i = 0; i < a.rows(); ++i) {
        out << " ";
        for (int j = 0; j < a.cols(); ++j) {
            const std::string& c =
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(a.cols()) +
                      static_cast<std::size_t>(j)];
            out << " " << std::string(width - c.size(), ' ') << c;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string format_matrix_table(const AnyMatrix& m) {
    if (is_exact(m)) return table_of(std::get<ExactMatrix>(m));
    return table_of(std::get<FloatMatrix>(m));
}

}  // namespace adjkit
