#pragma once

#include <cmath>
#include <complex>
#include <string>

#include <gmpxx.h>

#include "adjkit/errors.hpp"

namespace adjkit {

using Complex = std::complex<double>;

/// Zero/rank decision policy for the floating kernel. The exact kernel
/// ignores it (every zero test is exact).
struct TolerancePolicy {
    double relative_eps = 1e-10;
    double absolute_floor = 1e-300;
};

/// Exact complex number with rational real and imaginary parts.
///
/// Components are kept canonical (reduced, positive denominator) by GMP.
/// All arithmetic is exact; there is no rounding anywhere in this type.
class RationalComplex {
public:
    RationalComplex() : re_(0), im_(0) {}
    RationalComplex(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    RationalComplex(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static RationalComplex from_fraction(long num, long den) {
        if (den == 0) throw DomainError("RationalComplex: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return RationalComplex(q);
    }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    RationalComplex conj() const { return RationalComplex(re_, -im_); }

    /// |re|^2 + |im|^2, exact.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    /// Approximate magnitude as a double; used only for pivot choices.
    double abs_approx() const {
        return std::hypot(re_.get_d(), im_.get_d());
    }

    Complex to_complex() const { return Complex(re_.get_d(), im_.get_d()); }

    RationalComplex operator-() const { return RationalComplex(-re_, -im_); }

    RationalComplex& operator+=(const RationalComplex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    RationalComplex& operator-=(const RationalComplex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    RationalComplex& operator*=(const RationalComplex& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    RationalComplex& operator/=(const RationalComplex& o) {
        if (o.is_zero()) throw DomainError("RationalComplex: division by zero");
        const mpq_class d = o.norm2();
        mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
        mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
    friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }

    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

private:
    mpq_class re_;
    mpq_class im_;
};

/// Canonical text form: "p/q", "p", "p+r/si", "-3-2i", "i-free when imag==0".
std::string to_string(const RationalComplex& v);

/// Text form "a", "a+bi", "bi" with round-trip-safe (%.17g) components.
std::string to_string(const Complex& v);

/// Parse the exact literal grammar: integers, fractions "p/q", and
/// complex combinations "p/q+r/si" (also "i", "-i", "2i").
RationalComplex parse_rational_complex(const std::string& text);

/// Parse a floating complex literal "a", "a+bi", "-2.5i", ...
Complex parse_float_complex(const std::string& text);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<RationalComplex> {
    static constexpr bool is_exact = true;
    static RationalComplex zero() { return RationalComplex(); }
    static RationalComplex one() { return RationalComplex(1); }
    static RationalComplex from_int(long v) { return RationalComplex(v); }
    static RationalComplex conj(const RationalComplex& s) { return s.conj(); }
    static double abs_approx(const RationalComplex& s) { return s.abs_approx(); }
    static bool is_zero(const RationalComplex& s, const TolerancePolicy&, double) {
        return s.is_zero();
    }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool is_exact = false;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex conj(const Complex& s) { return std::conj(s); }
    static double abs_approx(const Complex& s) { return std::abs(s); }
    static bool is_zero(const Complex& s, const TolerancePolicy& tol, double scale) {
        return std::abs(s) <= tol.absolute_floor + tol.relative_eps * scale;
    }
};

}  // namespace adjkit
