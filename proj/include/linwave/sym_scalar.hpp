#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "linwave/ext_scalar.hpp"

namespace linwave {

/// Laurent polynomial in the physical symbols (m, omega, hbar) with ExtScalar
/// coefficients. Exponents may be negative; zero coefficients are never stored,
/// so map equality is exact equality.
class SymScalar {
  public:
    /// Exponents of (m, omega, hbar), in that order.
    using Exponents = std::array<int, 3>;
    using TermMap = std::map<Exponents, ExtScalar>;

    SymScalar() = default;

    static SymScalar zero() { return {}; }
    static SymScalar one() { return constant(ExtScalar::integer(1)); }
    static SymScalar constant(const ExtScalar& c) { return term(c, 0, 0, 0); }
    static SymScalar rational(const Rational& q) { return constant(ExtScalar::rational(q)); }
    static SymScalar term(const ExtScalar& c, int mass_exp, int omega_exp, int hbar_exp);
    static SymScalar mass(int exp = 1) { return term(ExtScalar::integer(1), exp, 0, 0); }
    static SymScalar omega(int exp = 1) { return term(ExtScalar::integer(1), 0, exp, 0); }
    static SymScalar hbar(int exp = 1) { return term(ExtScalar::integer(1), 0, 0, exp); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// The (exponents, coefficient) pair when the polynomial has exactly one term.
    std::optional<std::pair<Exponents, ExtScalar>> single_term() const;

    SymScalar conj() const;

    friend bool operator==(const SymScalar&, const SymScalar&) = default;

    SymScalar operator+(const SymScalar& o) const;
    SymScalar operator-(const SymScalar& o) const;
    SymScalar operator-() const;
    SymScalar operator*(const SymScalar& o) const;
    SymScalar& operator+=(const SymScalar& o) { *this = *this + o; return *this; }
    SymScalar& operator-=(const SymScalar& o) { *this = *this - o; return *this; }
    SymScalar& operator*=(const SymScalar& o) { *this = *this * o; return *this; }

    /// Evaluates at numeric (m, omega, hbar). Substituting zero into a symbol
    /// that occurs with a negative exponent throws std::domain_error.
    std::complex<double> evaluate(double mass, double omega, double hbar) const;

    std::string to_string() const;

  private:
    void insert(const Exponents& e, const ExtScalar& c);

    TermMap terms_;
};

inline SymScalar operator*(const ExtScalar& c, const SymScalar& s) {
    return SymScalar::constant(c) * s;
}
inline SymScalar operator*(const Rational& q, const SymScalar& s) {
    return SymScalar::rational(q) * s;
}

}  // namespace linwave
