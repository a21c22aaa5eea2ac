#include "linwave/sym_scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace linwave {

namespace {

double ipow(double base, int exp, const char* symbol) {
    if (exp == 0) return 1.0;
    if (base == 0.0) {
        if (exp < 0)
            throw std::domain_error(std::string("zero substituted for '") + symbol +
                                    "' which occurs with a negative exponent");
        return 0.0;
    }
    double result = std::pow(base, std::abs(exp));
    return exp > 0 ? result : 1.0 / result;
}

void append_symbol(std::string& out, const char* name, int exp) {
    if (exp == 0) return;
    out += "*";
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

SymScalar SymScalar::term(const ExtScalar& c, int mass_exp, int omega_exp, int hbar_exp) {
    SymScalar s;
    s.insert({mass_exp, omega_exp, hbar_exp}, c);
    return s;
}

void SymScalar::insert(const Exponents& e, const ExtScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<std::pair<SymScalar::Exponents, ExtScalar>> SymScalar::single_term() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
}

SymScalar SymScalar::conj() const {
    SymScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
    return out;
}

SymScalar SymScalar::operator+(const SymScalar& o) const {
    SymScalar out = *this;
    for (const auto& [e, c] : o.terms_) out.insert(e, c);
    return out;
}

SymScalar SymScalar::operator-(const SymScalar& o) const {
    SymScalar out = *this;
    for (const auto& [e, c] : o.terms_) out.insert(e, -c);
    return out;
}

SymScalar SymScalar::operator-() const {
    SymScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

SymScalar SymScalar::operator*(const SymScalar& o) const {
    SymScalar out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.insert({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

std::complex<double> SymScalar::evaluate(double mass, double omega, double hbar) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double factor = ipow(mass, e[0], "m") * ipow(omega, e[1], "omega") * ipow(hbar, e[2], "hbar");
        sum += c.to_complex() * factor;
    }
    return sum;
}

std::string SymScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coeff = c.to_string();
        bool composite = coeff.find('+') != std::string::npos || coeff.find('-', 1) != std::string::npos;
        out += composite && coeff.front() != '(' ? "(" + coeff + ")" : coeff;
        append_symbol(out, "m", e[0]);
        append_symbol(out, "omega", e[1]);
        append_symbol(out, "hbar", e[2]);
    }
    return out;
}

}  // namespace linwave
