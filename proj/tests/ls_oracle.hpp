#pragma once

// Test-only oracle: eigenvalues of L.s on the (2l+1)(2s+1)-dimensional product
// space, computed by building the standard angular momentum matrices, forming
// sum_i L_i (x) s_i numerically (hbar = 1) and diagonalizing with cyclic
// Jacobi sweeps. Independent of the exact-arithmetic code paths under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ls_oracle {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

// Standard representation of dimension twice_j + 1, hbar = 1:
// J3 = diag(j, j-1, ..., -j), (J+)_{m', m} = sqrt(j(j+1) - m(m+1)).
inline std::vector<ComplexMatrix> angular_momentum_matrices(int twice_j) {
    const int dim = twice_j + 1;
    const double j = twice_j / 2.0;
    ComplexMatrix j1(dim, std::vector<std::complex<double>>(dim));
    ComplexMatrix j2 = j1, j3 = j1;
    for (int a = 0; a < dim; ++a) {
        const double m = j - a;  // row a holds |j, m>
        j3[a][a] = m;
        if (a > 0) {
            const double ladder = std::sqrt(j * (j + 1) - m * (m + 1));
            j1[a - 1][a] = 0.5 * ladder;
            j1[a][a - 1] = 0.5 * ladder;
            j2[a - 1][a] = std::complex<double>(0.0, -0.5 * ladder);
            j2[a][a - 1] = std::complex<double>(0.0, 0.5 * ladder);
        }
    }
    return {j1, j2, j3};
}

inline ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const size_t na = a.size(), nb = b.size();
    ComplexMatrix out(na * nb, std::vector<std::complex<double>>(na * nb));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j)
            for (size_t k = 0; k < nb; ++k)
                for (size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return out;
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> m) {
    const size_t n = m.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += m[p][q] * m[p][q];
        if (off < 1e-26) break;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(m[p][q]) < 1e-15) continue;
                const double theta = 0.5 * std::atan2(2.0 * m[p][q], m[q][q] - m[p][p]);
                const double c = std::cos(theta), s = std::sin(theta);
                for (size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
    }
    std::vector<double> eigenvalues(n);
    for (size_t i = 0; i < n; ++i) eigenvalues[i] = m[i][i];
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

// Sorted eigenvalues of sum_i L_i (x) s_i, each doubled in multiplicity by the
// real embedding H = A + iB -> [[A, -B], [B, A]].
inline std::vector<double> ls_spectrum(int l, int twice_s) {
    if (l < 0 || twice_s < 0) throw std::invalid_argument("invalid quantum numbers");
    const auto orbital = angular_momentum_matrices(2 * l);
    const auto spin = angular_momentum_matrices(twice_s);
    const size_t dim = static_cast<size_t>(2 * l + 1) * (twice_s + 1);
    ComplexMatrix h(dim, std::vector<std::complex<double>>(dim));
    for (int axis = 0; axis < 3; ++axis) {
        ComplexMatrix term = kronecker(orbital[axis], spin[axis]);
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c) h[r][c] += term[r][c];
    }
    std::vector<std::vector<double>> real(2 * dim, std::vector<double>(2 * dim));
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            real[r][c] = h[r][c].real();
            real[r][c + dim] = -h[r][c].imag();
            real[r + dim][c] = h[r][c].imag();
            real[r + dim][c + dim] = h[r][c].real();
        }
    return jacobi_eigenvalues(real);
}

// Multiplicity of `value` in a sorted spectrum, within `tolerance`.
inline int count_within(const std::vector<double>& spectrum, double value, double tolerance) {
    int count = 0;
    for (double x : spectrum)
        if (std::abs(x - value) <= tolerance) ++count;
    return count;
}

}  // namespace ls_oracle
