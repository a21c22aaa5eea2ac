#include "linwave/spin_model.hpp"

#include <stdexcept>

namespace linwave {

namespace {

// Levi-Civita symbol on indices 0..2.
int epsilon(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

std::array<SymMatrix, 3> pauli_matrices() {
    SymMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1.at(0, 1) = SymScalar::one();
    s1.at(1, 0) = SymScalar::one();
    s2.at(0, 1) = SymScalar::constant(ExtScalar::i(-1));
    s2.at(1, 0) = SymScalar::constant(ExtScalar::i(1));
    s3.at(0, 0) = SymScalar::one();
    s3.at(1, 1) = SymScalar::rational(-1);
    return {s1, s2, s3};
}

// Spin-1 matrices (s_i)_jk = -i hbar eps_ijk.
std::array<SymMatrix, 3> spin_one_matrices() {
    std::array<SymMatrix, 3> s{SymMatrix(3, 3), SymMatrix(3, 3), SymMatrix(3, 3)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                int eps = epsilon(i, j, k);
                if (eps != 0)
                    s[i].at(j, k) = SymScalar::term(ExtScalar::i(-eps), 0, 0, 1);
            }
    return s;
}

// Standard spin-3/2 representation. Off-diagonal magnitudes are sqrt3/2 and 1.
std::array<SymMatrix, 3> spin_three_halves_matrices() {
    SymMatrix s1(4, 4), s2(4, 4), s3(4, 4);
    const SymScalar root3_half = SymScalar::term(ExtScalar::sqrt3(Rational(1, 2)), 0, 0, 1);
    const SymScalar one_hbar = SymScalar::hbar();
    s1.at(0, 1) = root3_half;
    s1.at(1, 0) = root3_half;
    s1.at(1, 2) = one_hbar;
    s1.at(2, 1) = one_hbar;
    s1.at(2, 3) = root3_half;
    s1.at(3, 2) = root3_half;

    const SymScalar i_root3_half = SymScalar::term(ExtScalar{{}, {0, 0, Rational(1, 2), 0}}, 0, 0, 1);
    const SymScalar i_hbar = SymScalar::term(ExtScalar::i(), 0, 0, 1);
    s2.at(0, 1) = -i_root3_half;
    s2.at(1, 0) = i_root3_half;
    s2.at(1, 2) = -i_hbar;
    s2.at(2, 1) = i_hbar;
    s2.at(2, 3) = -i_root3_half;
    s2.at(3, 2) = i_root3_half;

    const Rational halves[4] = {Rational(3, 2), Rational(1, 2), Rational(-1, 2), Rational(-3, 2)};
    for (int i = 0; i < 4; ++i)
        s3.at(i, i) = SymScalar::term(ExtScalar::rational(halves[i]), 0, 0, 1);
    return {s1, s2, s3};
}

// 2x4 adjoint coupling matrices; the stored aux matrices are their conjugate
// transposes. sqrt(3/2) = sqrt6/2 and sqrt(1/2) = sqrt2/2 stay inside the field.
std::array<SymMatrix, 3> spin_three_halves_adjoint_aux() {
    SymMatrix k1(2, 4), k2(2, 4), k3(2, 4);
    const SymScalar root32 = SymScalar::term(ExtScalar::sqrt6(Rational(1, 2)), 0, 0, 1);
    const SymScalar root12 = SymScalar::term(ExtScalar::sqrt2(Rational(1, 2)), 0, 0, 1);
    k1.at(0, 0) = -root32;
    k1.at(0, 2) = root12;
    k1.at(1, 1) = -root12;
    k1.at(1, 3) = root32;

    const SymScalar i_root32 = SymScalar::term(ExtScalar{{}, {0, 0, 0, Rational(1, 2)}}, 0, 0, 1);
    const SymScalar i_root12 = SymScalar::term(ExtScalar{{}, {0, Rational(1, 2), 0, 0}}, 0, 0, 1);
    k2.at(0, 0) = -i_root32;
    k2.at(0, 2) = -i_root12;
    k2.at(1, 1) = -i_root12;
    k2.at(1, 3) = -i_root32;

    const SymScalar root2 = SymScalar::term(ExtScalar::sqrt2(), 0, 0, 1);
    k3.at(0, 1) = root2;
    k3.at(1, 2) = root2;
    return {k1, k2, k3};
}

}  // namespace

int twice(Spin spin) {
    switch (spin) {
        case Spin::OneHalf: return 1;
        case Spin::One: return 2;
        case Spin::ThreeHalves: return 3;
    }
    throw std::invalid_argument("unsupported spin");
}

int spin_dimension(Spin spin) { return twice(spin) + 1; }

int aux_dimension(Spin spin) {
    switch (spin) {
        case Spin::OneHalf: return 0;
        case Spin::One: return 3;
        case Spin::ThreeHalves: return 2;
    }
    throw std::invalid_argument("unsupported spin");
}

int total_dimension(Spin spin) { return 2 * spin_dimension(spin) + aux_dimension(spin); }

std::string to_string(Spin spin) {
    switch (spin) {
        case Spin::OneHalf: return "1/2";
        case Spin::One: return "1";
        case Spin::ThreeHalves: return "3/2";
    }
    throw std::invalid_argument("unsupported spin");
}

Spin parse_spin(const std::string& text) {
    if (text == "1/2" || text == "0.5") return Spin::OneHalf;
    if (text == "1") return Spin::One;
    if (text == "3/2" || text == "1.5") return Spin::ThreeHalves;
    throw std::invalid_argument("unsupported spin '" + text + "' (expected 1/2, 1 or 3/2)");
}

std::array<SymMatrix, 3> build_spin_matrices(Spin spin) {
    switch (spin) {
        case Spin::OneHalf: {
            auto sigma = pauli_matrices();
            const SymScalar half_hbar = SymScalar::term(ExtScalar::rational(Rational(1, 2)), 0, 0, 1);
            return {sigma[0].scaled(half_hbar), sigma[1].scaled(half_hbar),
                    sigma[2].scaled(half_hbar)};
        }
        case Spin::One: return spin_one_matrices();
        case Spin::ThreeHalves: return spin_three_halves_matrices();
    }
    throw std::invalid_argument("unsupported spin");
}

std::array<SymMatrix, 3> build_aux_matrices(Spin spin) {
    switch (spin) {
        case Spin::OneHalf:
            throw std::invalid_argument("spin 1/2 has no auxiliary matrices");
        case Spin::One: {
            // 3x3, single entry hbar at (row i, column 1).
            std::array<SymMatrix, 3> n{SymMatrix(3, 3), SymMatrix(3, 3), SymMatrix(3, 3)};
            for (int i = 0; i < 3; ++i) n[i].at(i, 0) = SymScalar::hbar();
            return n;
        }
        case Spin::ThreeHalves: {
            auto adj = spin_three_halves_adjoint_aux();
            return {adj[0].conj_transpose(), adj[1].conj_transpose(), adj[2].conj_transpose()};
        }
    }
    throw std::invalid_argument("unsupported spin");
}

SpinModel build_model(Spin spin) {
    SpinModel model;
    model.spin = spin;
    model.n = spin_dimension(spin);
    model.aux_dim = aux_dimension(spin);
    model.total_dim = total_dimension(spin);
    model.spin_matrices = build_spin_matrices(spin);
    if (model.aux_dim > 0) model.aux_matrices = build_aux_matrices(spin);

    // g = s*hbar; the first-order momentum blocks carry the prefactor g^-1.
    model.norm_factor = SymScalar::term(ExtScalar::rational(Rational(twice(spin), 2)), 0, 0, 1);
    const SymScalar inv_g = SymScalar::term(ExtScalar::rational(Rational(2, twice(spin))), 0, 0, -1);

    const int n = model.n;
    const int a = model.aux_dim;
    const int dim = model.total_dim;

    for (int i = 0; i < 3; ++i) {
        SymMatrix b(dim, dim);
        if (a > 0) {
            b.set_block(0, n, model.aux_matrices->at(i));
            b.set_block(n, 0, model.aux_matrices->at(i).conj_transpose());
        }
        b.set_block(0, n + a, model.spin_matrices[i]);
        b.set_block(n + a, 0, model.spin_matrices[i]);
        model.B[i] = b.scaled(inv_g);
    }

    model.A = SymMatrix(dim, dim);
    for (int i = 0; i < n; ++i) model.A.at(i, i) = SymScalar::one();

    model.C = SymMatrix(dim, dim);
    const SymScalar two_m = SymScalar::term(ExtScalar::integer(2), 1, 0, 0);
    for (int i = n; i < dim; ++i) model.C.at(i, i) = two_m;

    const SymScalar half_inv_m = SymScalar::term(ExtScalar::rational(Rational(1, 2)), -1, 0, 0);
    model.A_adj = model.C.scaled(half_inv_m);
    model.C_adj = model.A.scaled(two_m);

    model.eta = (Rational(2) * (model.A * model.A)) - SymMatrix::identity(dim);

    if (spin == Spin::ThreeHalves)
        model.alpha = SymScalar::term(ExtScalar::rational(Rational(1, 2)), -1, 0, -1);

    return model;
}

ConstraintEmbedding constraint_embedding(const SpinModel& model) {
    const int n = model.n;
    if (model.spin == Spin::OneHalf && model.aux_dim == 0 && model.total_dim == 2 * n) {
        // The squared-momentum condition already holds as a matrix identity;
        // the wave function is unconstrained.
        return {PolyMatrix::constant(SymMatrix::identity(model.total_dim)), model.total_dim};
    }

    // psi = [u; -(1/(2 m g)) aux^+.p u; -(1/(2 m g)) s.p u]
    const SymScalar factor =
        SymScalar::term(ExtScalar::rational(Rational(-1, twice(model.spin))), -1, 0, -1);

    PolyMatrix s(model.total_dim, n);
    s.add_term({0, 0, 0, 0}, [&] {
        SymMatrix top(model.total_dim, n);
        top.set_block(0, 0, SymMatrix::identity(n));
        return top;
    }());
    for (int axis = 0; axis < 3; ++axis) {
        SymMatrix coeff(model.total_dim, n);
        if (model.aux_dim > 0)
            coeff.set_block(model.aux_offset(), 0,
                            model.aux_matrices->at(axis).conj_transpose().scaled(factor));
        coeff.set_block(model.lower_offset(), 0, model.spin_matrices[axis].scaled(factor));
        s.add_term(PolyMatrix::momentum_key(axis), coeff);
    }
    return {s, n};
}

PolyMatrix momentum_term(const SpinModel& model) {
    PolyMatrix bp(model.total_dim, model.total_dim);
    for (int axis = 0; axis < 3; ++axis) bp.add_term(PolyMatrix::momentum_key(axis), model.B[axis]);
    return bp;
}

}  // namespace linwave
