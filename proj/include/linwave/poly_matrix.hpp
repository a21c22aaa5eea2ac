#pragma once

#include <array>
#include <map>
#include <string>

#include "linwave/sym_matrix.hpp"

namespace linwave {

/// Exponents of the commuting symbols (E, p1, p2, p3).
using PolyKey = std::array<int, 4>;

std::string poly_key_to_string(const PolyKey& key);

/// Matrix-valued polynomial in the commuting symbols E, p1, p2, p3.
/// All coefficients share one shape; zero coefficients are never stored,
/// so map equality is exact polynomial equality.
class PolyMatrix {
  public:
    using TermMap = std::map<PolyKey, SymMatrix>;

    PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static PolyMatrix constant(const SymMatrix& m);
    static PolyMatrix monomial(const PolyKey& key, const SymMatrix& coefficient);
    static PolyMatrix zero(int rows, int cols) { return PolyMatrix(rows, cols); }

    static PolyKey energy_key() { return {1, 0, 0, 0}; }
    static PolyKey momentum_key(int axis);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient at `key`; the zero matrix when the monomial is absent.
    SymMatrix coefficient(const PolyKey& key) const;

    void add_term(const PolyKey& key, const SymMatrix& coefficient);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;  // throws on dimension mismatch
    PolyMatrix scaled(const SymScalar& s) const;

  private:
    int rows_, cols_;
    TermMap terms_;
};

/// p1^2 + p2^2 + p3^2 times the n x n identity.
PolyMatrix momentum_squared(int n);

}  // namespace linwave
