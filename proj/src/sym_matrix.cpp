#include "linwave/sym_matrix.hpp"

#include <stdexcept>

namespace linwave {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

SymMatrix::SymMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    data_.resize(static_cast<size_t>(rows) * cols);
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = SymScalar::one();
    return m;
}

SymMatrix SymMatrix::unit_entry(int rows, int cols, int row, int col, const SymScalar& value) {
    SymMatrix m(rows, cols);
    m.at(row, col) = value;
    return m;
}

const SymScalar& SymMatrix::at(int r, int c) const {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

SymScalar& SymMatrix::at(int r, int c) {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, "matrix index out of range");
    return data_[static_cast<size_t>(r) * cols_ + c];
}

bool SymMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool SymMatrix::is_hermitian() const {
    return rows_ == cols_ && *this == conj_transpose();
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix addition: dimension mismatch");
    SymMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix subtraction: dimension mismatch");
    SymMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

SymMatrix SymMatrix::operator-() const {
    SymMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

SymMatrix SymMatrix::operator*(const SymMatrix& o) const {
    require(cols_ == o.rows_, "matrix product: dimension mismatch");
    SymMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const SymScalar& lhs = at(r, k);
            if (lhs.is_zero()) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const SymScalar& rhs = o.at(k, c);
                if (rhs.is_zero()) continue;
                out.at(r, c) += lhs * rhs;
            }
        }
    return out;
}

SymMatrix SymMatrix::scaled(const SymScalar& s) const {
    SymMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

SymMatrix SymMatrix::conj_transpose() const {
    SymMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
    return out;
}

void SymMatrix::set_block(int r0, int c0, const SymMatrix& block) {
    require(r0 >= 0 && c0 >= 0 && r0 + block.rows_ <= rows_ && c0 + block.cols_ <= cols_,
            "set_block: block does not fit");
    for (int r = 0; r < block.rows_; ++r)
        for (int c = 0; c < block.cols_; ++c) at(r0 + r, c0 + c) = block.at(r, c);
}

SymMatrix SymMatrix::block(int r0, int c0, int rows, int cols) const {
    require(r0 >= 0 && c0 >= 0 && rows > 0 && cols > 0 && r0 + rows <= rows_ && c0 + cols <= cols_,
            "block: range out of bounds");
    SymMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = at(r0 + r, c0 + c);
    return out;
}

SymMatrix SymMatrix::submatrix(const std::vector<int>& keep_rows,
                               const std::vector<int>& keep_cols) const {
    require(!keep_rows.empty() && !keep_cols.empty(), "submatrix: empty selection");
    SymMatrix out(static_cast<int>(keep_rows.size()), static_cast<int>(keep_cols.size()));
    for (size_t r = 0; r < keep_rows.size(); ++r)
        for (size_t c = 0; c < keep_cols.size(); ++c) out.at(static_cast<int>(r), static_cast<int>(c)) = at(keep_rows[r], keep_cols[c]);
    return out;
}

std::string SymMatrix::to_string() const {
    std::string out;
    for (int r = 0; r < rows_; ++r) {
        out += "[ ";
        for (int c = 0; c < cols_; ++c) {
            out += at(r, c).to_string();
            if (c + 1 < cols_) out += ", ";
        }
        out += " ]\n";
    }
    return out;
}

}  // namespace linwave
