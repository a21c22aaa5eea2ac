#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>

#include "linwave/sym_matrix.hpp"

namespace linwave {

/// Monomial in the Heisenberg algebra, in normal-ordered convention: all
/// position factors to the left of all momentum factors. The energy symbol E
/// commutes with everything and is carried as a plain exponent.
struct OperatorMonomial {
    int energy = 0;
    std::array<int, 3> x{0, 0, 0};
    std::array<int, 3> p{0, 0, 0};

    friend auto operator<=>(const OperatorMonomial&, const OperatorMonomial&) = default;

    static OperatorMonomial unit() { return {}; }
    static OperatorMonomial position(int axis, int power = 1);
    static OperatorMonomial momentum(int axis, int power = 1);

    std::string to_string() const;
};

/// Polynomial in x1..x3, p1..p3 (and the commuting symbol E) with SymMatrix
/// coefficients, kept in normal-ordered canonical form. Products reorder via
/// [x_i, p_j] = i hbar delta_ij, so map equality is operator equality.
class OperatorPolynomial {
  public:
    using TermMap = std::map<OperatorMonomial, SymMatrix>;

    OperatorPolynomial(int rows, int cols) : rows_(rows), cols_(cols) {}

    static OperatorPolynomial zero(int rows, int cols) { return {rows, cols}; }
    static OperatorPolynomial constant(const SymMatrix& m) {
        return monomial(OperatorMonomial::unit(), m);
    }
    static OperatorPolynomial monomial(const OperatorMonomial& mono, const SymMatrix& coefficient);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymMatrix coefficient(const OperatorMonomial& mono) const;
    void add_term(const OperatorMonomial& mono, const SymMatrix& coefficient);

    friend bool operator==(const OperatorPolynomial&, const OperatorPolynomial&) = default;

    OperatorPolynomial operator+(const OperatorPolynomial& o) const;
    OperatorPolynomial operator-(const OperatorPolynomial& o) const;
    OperatorPolynomial operator-() const;
    /// Operator product in normal-ordered form; matrix coefficients multiply
    /// in operator order. Throws on shape mismatch.
    OperatorPolynomial operator*(const OperatorPolynomial& o) const;

    OperatorPolynomial scaled(const SymScalar& s) const;

    /// Coefficients restricted to the given block (shapes may become
    /// rectangular; products still compose when shapes chain).
    OperatorPolynomial block(int r0, int c0, int rows, int cols) const;

    /// Operator adjoint: reverses factor order, conjugate-transposes matrix
    /// coefficients and re-normal-orders. Square coefficients only.
    OperatorPolynomial adjoint() const;
    bool is_hermitian() const { return *this == adjoint(); }

  private:
    int rows_, cols_;
    TermMap terms_;
};

/// Sum over axes of matrices[axis] * p_axis.
OperatorPolynomial momentum_contraction(const std::array<SymMatrix, 3>& matrices);
/// Sum over axes of matrices[axis] * x_axis.
OperatorPolynomial position_contraction(const std::array<SymMatrix, 3>& matrices);

/// L.s = sum_k (r x p)_k s_k with n x n coefficients (already normal-ordered).
OperatorPolynomial angular_momentum_dot_spin(const std::array<SymMatrix, 3>& spin_matrices);

}  // namespace linwave
