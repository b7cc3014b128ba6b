#include "adjkit/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace adjkit {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool valid_rational_token(const std::string& t) {
    // [+-]? digits ( '/' digits )?
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) return false;
    if (i == t.size()) return true;
    if (t[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        ++i;
        ++digits;
    }
    return digits > 0 && i == t.size();
}

mpq_class parse_rational_token(const std::string& tok) {
    if (!valid_rational_token(tok))
        throw ParseError("invalid rational literal: '" + tok + "'");
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
        mpz_class den(tok.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + tok + "'");
    }
    std::string body = tok;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    mpq_class q(body);
    q.canonicalize();
    return q;
}

// Coefficient of an imaginary term with the trailing 'i' removed; "" and
// bare signs mean 1 / -1.
mpq_class parse_imag_coefficient(std::string t) {
    if (t.empty() || t == "+") return mpq_class(1);
    if (t == "-") return mpq_class(-1);
    return parse_rational_token(t);
}

double parse_double_token(const std::string& t) {
    if (t.empty()) throw ParseError("empty numeric literal");
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + t.size())
        throw ParseError("invalid numeric literal: '" + t + "'");
    if (!std::isfinite(v)) throw DomainError("non-finite value in floating input: '" + t + "'");
    return v;
}

double parse_imag_coefficient_double(std::string t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double_token(t);
}

// Position of the '+'/'-' separating the two terms of "a+bi", or npos.
// A sign at position 0 or directly after an exponent marker does not split.
std::size_t find_term_split(const std::string& s, bool allow_exponent) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != '+' && s[i] != '-') continue;
        if (allow_exponent && (s[i - 1] == 'e' || s[i - 1] == 'E')) continue;
        return i;
    }
    return std::string::npos;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(const RationalComplex& v) {
    if (v.imag() == 0) return v.real().get_str();
    const mpq_class im_abs = abs(v.imag());
    const std::string im = im_abs.get_str() + "i";
    if (v.real() == 0) return (v.imag() < 0 ? "-" : "") + im;
    return v.real().get_str() + (v.imag() < 0 ? "-" : "+") + im;
}

std::string to_string(const Complex& v) {
    if (v.imag() == 0.0) return format_double(v.real());
    const std::string im = format_double(std::abs(v.imag())) + "i";
    if (v.real() == 0.0) return (v.imag() < 0 ? "-" : "") + im;
    return format_double(v.real()) + (v.imag() < 0 ? "-" : "+") + im;
}

RationalComplex parse_rational_complex(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar literal");
    const std::size_t split = find_term_split(s, /*allow_exponent=*/false);
    if (split == std::string::npos) {
        if (s.back() == 'i') {
            return RationalComplex(mpq_class(0), parse_imag_coefficient(s.substr(0, s.size() - 1)));
        }
        return RationalComplex(parse_rational_token(s));
    }
    std::string first = s.substr(0, split);
    std::string second = s.substr(split);  // keeps its sign
    if (second.back() != 'i')
        throw ParseError("expected imaginary second term in '" + text + "'");
    if (first.back() == 'i')
        throw ParseError("two imaginary terms in '" + text + "'");
    second.pop_back();
    return RationalComplex(parse_rational_token(first), parse_imag_coefficient(second));
}

Complex parse_float_complex(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty scalar literal");
    const std::size_t split = find_term_split(s, /*allow_exponent=*/true);
    if (split == std::string::npos) {
        if (s.back() == 'i') {
            return Complex(0.0, parse_imag_coefficient_double(s.substr(0, s.size() - 1)));
        }
        return Complex(parse_double_token(s), 0.0);
    }
    std::string first = s.substr(0, split);
    std::string second = s.substr(split);
    if (second.back() != 'i')
        throw ParseError("expected imaginary second term in '" + text + "'");
    if (first.back() == 'i')
        throw ParseError("two imaginary terms in '" + text + "'");
    second.pop_back();
    return Complex(parse_double_token(first), parse_imag_coefficient_double(second));
}

}  // namespace adjkit
