#pragma once

#include <string>
#include <vector>

#include "linwave/sym_scalar.hpp"

namespace linwave {

/// Dense matrix of SymScalar entries. Dimensions are fixed at construction;
/// all arithmetic is exact. Maximum dimension in this project is 10x10, so
/// no sparsity is attempted.
class SymMatrix {
  public:
    SymMatrix() : rows_(0), cols_(0) {}
    SymMatrix(int rows, int cols);

    static SymMatrix identity(int n);
    static SymMatrix zero(int rows, int cols) { return SymMatrix(rows, cols); }
    /// n x n matrix with `value` at (row, col) (0-based) and zeros elsewhere.
    static SymMatrix unit_entry(int rows, int cols, int row, int col, const SymScalar& value);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const SymScalar& at(int r, int c) const;
    SymScalar& at(int r, int c);
    const SymScalar& operator()(int r, int c) const { return at(r, c); }

    bool is_zero() const;
    bool is_hermitian() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

    SymMatrix operator+(const SymMatrix& o) const;
    SymMatrix operator-(const SymMatrix& o) const;
    SymMatrix operator-() const;
    SymMatrix operator*(const SymMatrix& o) const;  // throws on dimension mismatch

    SymMatrix scaled(const SymScalar& s) const;
    SymMatrix conj_transpose() const;

    /// Copies `block` into this matrix with top-left corner at (r0, c0).
    void set_block(int r0, int c0, const SymMatrix& block);
    SymMatrix block(int r0, int c0, int rows, int cols) const;
    /// Matrix restricted to the given row/column indices, in the given order.
    SymMatrix submatrix(const std::vector<int>& keep_rows, const std::vector<int>& keep_cols) const;

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<SymScalar> data_;
};

inline SymMatrix operator*(const SymScalar& s, const SymMatrix& m) { return m.scaled(s); }
inline SymMatrix operator*(const ExtScalar& c, const SymMatrix& m) {
    return m.scaled(SymScalar::constant(c));
}
inline SymMatrix operator*(const Rational& q, const SymMatrix& m) {
    return m.scaled(SymScalar::rational(q));
}
inline SymMatrix conj_transpose(const SymMatrix& m) { return m.conj_transpose(); }

}  // namespace linwave
