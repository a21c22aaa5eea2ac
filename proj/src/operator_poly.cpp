#include "linwave/operator_poly.hpp"

#include <stdexcept>

namespace linwave {

namespace {

int epsilon(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

Rational binomial(int n, int k) {
    Rational result = 1;
    for (int i = 0; i < k; ++i) result *= Rational(n - i, i + 1);
    return result;
}

Rational factorial(int n) {
    Rational result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

// (-i)^k as an ExtScalar.
ExtScalar minus_i_power(int k) {
    switch (k % 4) {
        case 0: return ExtScalar::integer(1);
        case 1: return ExtScalar::i(-1);
        case 2: return ExtScalar::integer(-1);
        default: return ExtScalar::i(1);
    }
}

void append_power(std::string& out, const char* name, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
}

}  // namespace

OperatorMonomial OperatorMonomial::position(int axis, int power) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("position axis must be 0, 1 or 2");
    OperatorMonomial m;
    m.x[axis] = power;
    return m;
}

OperatorMonomial OperatorMonomial::momentum(int axis, int power) {
    if (axis < 0 || axis > 2) throw std::invalid_argument("momentum axis must be 0, 1 or 2");
    OperatorMonomial m;
    m.p[axis] = power;
    return m;
}

std::string OperatorMonomial::to_string() const {
    std::string out;
    append_power(out, "E", energy);
    const char* xn[3] = {"x1", "x2", "x3"};
    const char* pn[3] = {"p1", "p2", "p3"};
    for (int i = 0; i < 3; ++i) append_power(out, xn[i], x[i]);
    for (int i = 0; i < 3; ++i) append_power(out, pn[i], p[i]);
    return out.empty() ? "1" : out;
}

OperatorPolynomial OperatorPolynomial::monomial(const OperatorMonomial& mono,
                                                const SymMatrix& coefficient) {
    OperatorPolynomial poly(coefficient.rows(), coefficient.cols());
    poly.add_term(mono, coefficient);
    return poly;
}

SymMatrix OperatorPolynomial::coefficient(const OperatorMonomial& mono) const {
    auto it = terms_.find(mono);
    return it != terms_.end() ? it->second : SymMatrix::zero(rows_, cols_);
}

void OperatorPolynomial::add_term(const OperatorMonomial& mono, const SymMatrix& coefficient) {
    if (coefficient.rows() != rows_ || coefficient.cols() != cols_)
        throw std::invalid_argument("operator coefficient has the wrong shape");
    if (coefficient.is_zero()) return;
    auto [it, fresh] = terms_.emplace(mono, coefficient);
    if (!fresh) {
        it->second = it->second + coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OperatorPolynomial OperatorPolynomial::operator+(const OperatorPolynomial& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("operator addition: shape mismatch");
    OperatorPolynomial out = *this;
    for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, coeff);
    return out;
}

OperatorPolynomial OperatorPolynomial::operator-(const OperatorPolynomial& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("operator subtraction: shape mismatch");
    OperatorPolynomial out = *this;
    for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, -coeff);
    return out;
}

OperatorPolynomial OperatorPolynomial::operator-() const {
    OperatorPolynomial out(rows_, cols_);
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
    return out;
}

OperatorPolynomial OperatorPolynomial::operator*(const OperatorPolynomial& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("operator product: shape mismatch");
    OperatorPolynomial out(rows_, o.cols_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            SymMatrix product = c1 * c2;
            // Reorder p^b x^c one axis at a time:
            //   p^b x^c = sum_k C(b,k) C(c,k) k! (-i hbar)^k x^(c-k) p^(b-k).
            std::array<int, 3> kmax;
            for (int axis = 0; axis < 3; ++axis)
                kmax[axis] = std::min(m1.p[axis], m2.x[axis]);
            std::array<int, 3> k{0, 0, 0};
            while (true) {
                Rational coeff = 1;
                int total_k = 0;
                for (int axis = 0; axis < 3; ++axis) {
                    coeff *= binomial(m1.p[axis], k[axis]) * binomial(m2.x[axis], k[axis]) *
                             factorial(k[axis]);
                    total_k += k[axis];
                }
                OperatorMonomial mono;
                mono.energy = m1.energy + m2.energy;
                for (int axis = 0; axis < 3; ++axis) {
                    mono.x[axis] = m1.x[axis] + m2.x[axis] - k[axis];
                    mono.p[axis] = m1.p[axis] + m2.p[axis] - k[axis];
                }
                SymScalar scale =
                    SymScalar::term(minus_i_power(total_k) * ExtScalar::rational(coeff), 0, 0,
                                    total_k);
                out.add_term(mono, product.scaled(scale));

                int axis = 0;
                while (axis < 3 && k[axis] == kmax[axis]) { k[axis] = 0; ++axis; }
                if (axis == 3) break;
                ++k[axis];
            }
        }
    }
    return out;
}

OperatorPolynomial OperatorPolynomial::scaled(const SymScalar& s) const {
    OperatorPolynomial out(rows_, cols_);
    for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff.scaled(s));
    return out;
}

OperatorPolynomial OperatorPolynomial::block(int r0, int c0, int rows, int cols) const {
    OperatorPolynomial out(rows, cols);
    for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff.block(r0, c0, rows, cols));
    return out;
}

OperatorPolynomial OperatorPolynomial::adjoint() const {
    if (rows_ != cols_) throw std::invalid_argument("adjoint requires square coefficients");
    OperatorPolynomial out(rows_, cols_);
    const SymMatrix id = SymMatrix::identity(rows_);
    for (const auto& [mono, coeff] : terms_) {
        // (x^a p^b M)^+ = M^+ p^b x^a, then re-normal-order p^b x^a.
        OperatorMonomial p_part, x_part;
        p_part.energy = mono.energy;
        p_part.p = mono.p;
        x_part.x = mono.x;
        OperatorPolynomial reordered = monomial(p_part, id) * monomial(x_part, id);
        SymMatrix adj = coeff.conj_transpose();
        for (const auto& [m, c] : reordered.terms()) out.add_term(m, adj * c);
    }
    return out;
}

OperatorPolynomial momentum_contraction(const std::array<SymMatrix, 3>& matrices) {
    OperatorPolynomial out(matrices[0].rows(), matrices[0].cols());
    for (int axis = 0; axis < 3; ++axis)
        out.add_term(OperatorMonomial::momentum(axis), matrices[axis]);
    return out;
}

OperatorPolynomial position_contraction(const std::array<SymMatrix, 3>& matrices) {
    OperatorPolynomial out(matrices[0].rows(), matrices[0].cols());
    for (int axis = 0; axis < 3; ++axis)
        out.add_term(OperatorMonomial::position(axis), matrices[axis]);
    return out;
}

OperatorPolynomial angular_momentum_dot_spin(const std::array<SymMatrix, 3>& spin_matrices) {
    const int n = spin_matrices[0].rows();
    OperatorPolynomial out(n, n);
    for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                int eps = epsilon(k, a, b);
                if (eps == 0) continue;
                OperatorMonomial mono;
                mono.x[a] = 1;
                mono.p[b] = 1;
                out.add_term(mono, spin_matrices[k].scaled(SymScalar::rational(eps)));
            }
    return out;
}

}  // namespace linwave
