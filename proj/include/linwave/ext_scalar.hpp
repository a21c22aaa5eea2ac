#pragma once

#include <complex>
#include <string>

#include "linwave/rational.hpp"

namespace linwave {

/// Element of the real quartic field Q(sqrt2, sqrt3), stored on the basis
/// (1, sqrt2, sqrt3, sqrt6) with rational coordinates.
struct ExtReal {
    Rational a;  // coefficient of 1
    Rational b;  // coefficient of sqrt2
    Rational c;  // coefficient of sqrt3
    Rational d;  // coefficient of sqrt6

    ExtReal() = default;
    ExtReal(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    friend bool operator==(const ExtReal&, const ExtReal&) = default;

    ExtReal operator+(const ExtReal& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    ExtReal operator-(const ExtReal& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    ExtReal operator-() const { return {-a, -b, -c, -d}; }

    // Basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3,
    // sqrt3*sqrt6 = 3 sqrt2, sqrt6*sqrt6 = 6.
    ExtReal operator*(const ExtReal& o) const {
        return {a * o.a + 2 * b * o.b + 3 * c * o.c + 6 * d * o.d,
                a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
                a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
                a * o.d + d * o.a + b * o.c + c * o.b};
    }

    double to_double() const;
    std::string to_string() const;
};

/// Exact complex scalar over Q(sqrt2, sqrt3): re + i*im with ExtReal parts.
/// Closed under +, -, * and conjugation; equality is coordinate-wise.
/// Division is intentionally not provided.
struct ExtScalar {
    ExtReal re;
    ExtReal im;

    ExtScalar() = default;
    ExtScalar(ExtReal re_, ExtReal im_) : re(std::move(re_)), im(std::move(im_)) {}

    static ExtScalar integer(long long n) { return rational(Rational(n)); }
    static ExtScalar rational(const Rational& q) { return {{q, 0, 0, 0}, {}}; }
    static ExtScalar sqrt2(const Rational& q = 1) { return {{0, q, 0, 0}, {}}; }
    static ExtScalar sqrt3(const Rational& q = 1) { return {{0, 0, q, 0}, {}}; }
    static ExtScalar sqrt6(const Rational& q = 1) { return {{0, 0, 0, q}, {}}; }
    static ExtScalar i(const Rational& q = 1) { return {{}, {q, 0, 0, 0}}; }
    static ExtScalar complex(const Rational& re, const Rational& im) {
        return {{re, 0, 0, 0}, {im, 0, 0, 0}};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return *this == integer(1); }

    ExtScalar conj() const { return {re, -im}; }

    friend bool operator==(const ExtScalar&, const ExtScalar&) = default;

    ExtScalar operator+(const ExtScalar& o) const { return {re + o.re, im + o.im}; }
    ExtScalar operator-(const ExtScalar& o) const { return {re - o.re, im - o.im}; }
    ExtScalar operator-() const { return {-re, -im}; }
    ExtScalar operator*(const ExtScalar& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    ExtScalar& operator+=(const ExtScalar& o) { *this = *this + o; return *this; }
    ExtScalar& operator-=(const ExtScalar& o) { *this = *this - o; return *this; }
    ExtScalar& operator*=(const ExtScalar& o) { *this = *this * o; return *this; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    std::string to_string() const;
};

}  // namespace linwave
