#pragma once

#include <array>
#include <optional>
#include <string>

#include "linwave/poly_matrix.hpp"
#include "linwave/sym_matrix.hpp"

namespace linwave {

enum class Spin { OneHalf, One, ThreeHalves };

/// 2s as an integer: 1, 2, 3.
int twice(Spin spin);
/// Spin-space dimension n = 2s + 1: 2, 3, 4.
int spin_dimension(Spin spin);
/// Dimension of the auxiliary block: 0, 3, 2.
int aux_dimension(Spin spin);
/// Dimension of the full first-order system: 4, 9, 10 (= 6s + 1 for s >= 1).
int total_dimension(Spin spin);

std::string to_string(Spin spin);
/// Accepts "1/2", "1", "3/2" and the aliases "0.5", "1.5".
Spin parse_spin(const std::string& text);

/// Full matrix content of the first-order wave equation
///   (A E + B.p + C) psi = 0
/// for one spin value. The component layout of psi is
///   [physical (n) | auxiliary (aux_dim) | lower (n)],
/// with B_i = g^-1 [[0, aux_i, s_i], [aux_i^+, 0, 0], [s_i, 0, 0]],
/// A the projector on the physical block and C = 2m (1 - A).
///
/// All members are immutable after construction.
struct SpinModel {
    Spin spin;
    int n;          // spin-space dimension
    int aux_dim;    // middle-block dimension (0 when absent)
    int total_dim;  // n + aux_dim + n

    std::array<SymMatrix, 3> spin_matrices;             // s1, s2, s3 (n x n)
    std::optional<std::array<SymMatrix, 3>> aux_matrices;  // n x aux_dim, absent for spin 1/2

    SymScalar norm_factor;  // g = s*hbar: hbar/2, hbar, 3hbar/2

    SymMatrix A, C;                    // total_dim x total_dim
    std::array<SymMatrix, 3> B;        // hermitian
    SymMatrix A_adj, C_adj;            // A' = C/2m, C' = 2mA
    SymMatrix eta;                     // 2A^2 - 1

    std::optional<SymScalar> alpha;  // (2 m hbar)^-1, spin 3/2 only

    int physical_offset() const { return 0; }
    int aux_offset() const { return n; }
    int lower_offset() const { return n + aux_dim; }
};

/// Hermitian spin matrices satisfying [s_i, s_j] = i hbar eps_ijk s_k and
/// s1^2 + s2^2 + s3^2 = s(s+1) hbar^2.
std::array<SymMatrix, 3> build_spin_matrices(Spin spin);

/// Auxiliary matrices: for spin 1, 3x3 with a single hbar at (row i, column 1);
/// for spin 3/2, the 4x2 adjoints of the standard 2x4 coupling matrices.
/// Throws std::invalid_argument for spin 1/2 (no auxiliary block exists).
std::array<SymMatrix, 3> build_aux_matrices(Spin spin);

SpinModel build_model(Spin spin);

/// Polynomial matrix S(p), degree <= 1, embedding the free physical component
/// into the constraint surface: psi = S(p) u. Identity for spin 1/2; for
/// spins 1 and 3/2 the auxiliary and lower blocks are -(1/(2 m g)) aux^+.p
/// and -(1/(2 m g)) s.p.
struct ConstraintEmbedding {
    PolyMatrix matrix;
    int free_components;
};

ConstraintEmbedding constraint_embedding(const SpinModel& model);

/// B.p as a polynomial matrix.
PolyMatrix momentum_term(const SpinModel& model);

}  // namespace linwave
