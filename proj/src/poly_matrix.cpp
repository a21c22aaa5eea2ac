#include "linwave/poly_matrix.hpp"

#include <stdexcept>

namespace linwave {

std::string poly_key_to_string(const PolyKey& key) {
    std::string out;
    const char* names[4] = {"E", "p1", "p2", "p3"};
    for (int i = 0; i < 4; ++i) {
        if (key[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (key[i] != 1) out += "^" + std::to_string(key[i]);
    }
    return out.empty() ? "1" : out;
}

PolyMatrix PolyMatrix::constant(const SymMatrix& m) {
    return monomial({0, 0, 0, 0}, m);
}

PolyMatrix PolyMatrix::monomial(const PolyKey& key, const SymMatrix& coefficient) {
    PolyMatrix p(coefficient.rows(), coefficient.cols());
    p.add_term(key, coefficient);
    return p;
}

PolyKey PolyMatrix::momentum_key(int axis) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("momentum axis must be 0, 1 or 2");
    PolyKey key{0, 0, 0, 0};
    key[axis + 1] = 1;
    return key;
}

SymMatrix PolyMatrix::coefficient(const PolyKey& key) const {
    auto it = terms_.find(key);
    return it != terms_.end() ? it->second : SymMatrix::zero(rows_, cols_);
}

void PolyMatrix::add_term(const PolyKey& key, const SymMatrix& coefficient) {
    if (coefficient.rows() != rows_ || coefficient.cols() != cols_)
        throw std::invalid_argument("polynomial coefficient has the wrong shape");
    if (coefficient.is_zero()) return;
    auto [it, fresh] = terms_.emplace(key, coefficient);
    if (!fresh) {
        it->second = it->second + coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("polynomial addition: shape mismatch");
    PolyMatrix out = *this;
    for (const auto& [key, coeff] : o.terms_) out.add_term(key, coeff);
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("polynomial subtraction: shape mismatch");
    PolyMatrix out = *this;
    for (const auto& [key, coeff] : o.terms_) out.add_term(key, -coeff);
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("polynomial product: shape mismatch");
    PolyMatrix out(rows_, o.cols_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add_term({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]}, c1 * c2);
    return out;
}

PolyMatrix PolyMatrix::scaled(const SymScalar& s) const {
    PolyMatrix out(rows_, cols_);
    for (const auto& [key, coeff] : terms_) out.add_term(key, coeff.scaled(s));
    return out;
}

PolyMatrix momentum_squared(int n) {
    PolyMatrix out(n, n);
    for (int axis = 0; axis < 3; ++axis) {
        PolyKey key{0, 0, 0, 0};
        key[axis + 1] = 2;
        out.add_term(key, SymMatrix::identity(n));
    }
    return out;
}

}  // namespace linwave
