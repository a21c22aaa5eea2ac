#include "linwave/oscillator.hpp"

#include <stdexcept>

namespace linwave {

namespace {

// -i m omega, with the requested sign.
SymScalar coupling_scale(OscillatorSign sign) {
    return SymScalar::term(ExtScalar::i(sign == OscillatorSign::Standard ? -1 : 1), 1, 1, 0);
}

const SymScalar kTwoMass = SymScalar::term(ExtScalar::integer(2), 1, 0, 0);

void require_block(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(std::string("block substitution precondition failed: ") + what);
}

}  // namespace

OperatorPolynomial oscillator_substitute(const SpinModel& model, OscillatorSign sign,
                                         OmegaMode omega) {
    const int dim = model.total_dim;
    for (int i = 0; i < 3; ++i) {
        if (!(model.B[i] * model.eta + model.eta * model.B[i]).is_zero())
            throw std::runtime_error("eta does not anticommute with B_i");
    }

    OperatorPolynomial op(dim, dim);
    OperatorMonomial energy;
    energy.energy = 1;
    op.add_term(energy, model.A);
    op.add_term(OperatorMonomial::unit(), model.C);
    for (int axis = 0; axis < 3; ++axis) {
        op.add_term(OperatorMonomial::momentum(axis), model.B[axis]);
        if (omega == OmegaMode::Symbolic)
            op.add_term(OperatorMonomial::position(axis),
                        (model.B[axis] * model.eta).scaled(coupling_scale(sign)));
    }
    return op;
}

OperatorPolynomial reduce_to_second_order(const SpinModel& model, OmegaMode omega,
                                          OscillatorSign sign) {
    OperatorPolynomial op = oscillator_substitute(model, sign, omega);
    const int n = model.n;
    const int a = model.aux_dim;
    const int lower = model.lower_offset();

    // The rows below the physical block must read 2m * component + (block).u = 0
    // with no energy term, and the physical row must carry E exactly once.
    OperatorMonomial energy;
    energy.energy = 1;
    for (const auto& [mono, coeff] : op.terms()) {
        if (mono.energy > 0) {
            require_block(mono == energy, "energy appears beyond first order");
            SymMatrix expected(model.total_dim, model.total_dim);
            expected.set_block(0, 0, SymMatrix::identity(n));
            require_block(coeff == expected, "energy term is not the physical projector");
        }
    }
    SymMatrix constant = op.coefficient(OperatorMonomial::unit());
    SymMatrix expected_constant(model.total_dim, model.total_dim);
    for (int i = n; i < model.total_dim; ++i) expected_constant.at(i, i) = kTwoMass;
    require_block(constant == expected_constant, "constant term is not 2m on the auxiliary blocks");

    // E u = -(upper_aux v + upper_s w), 2m v = -(mid u), 2m w = -(low u)
    //   =>  H = (1/2m)(upper_aux mid + upper_s low).
    const SymScalar half_inv_m = SymScalar::term(ExtScalar::rational(Rational(1, 2)), -1, 0, 0);
    OperatorPolynomial upper_s = op.block(0, lower, n, n);
    OperatorPolynomial low = op.block(lower, 0, n, n);
    OperatorPolynomial hamiltonian = upper_s * low;
    if (a > 0) {
        OperatorPolynomial upper_aux = op.block(0, n, n, a);
        OperatorPolynomial mid = op.block(n, 0, a, n);
        hamiltonian = hamiltonian + upper_aux * mid;
    }
    return hamiltonian.scaled(half_inv_m);
}

SpinOrbitDecomposition spin_orbit_decompose(const OperatorPolynomial& hamiltonian,
                                            const SpinModel& model) {
    const int n = model.n;
    if (hamiltonian.rows() != n || hamiltonian.cols() != n)
        throw std::invalid_argument("hamiltonian shape does not match the physical block");

    SpinOrbitDecomposition result;
    OperatorPolynomial remainder = hamiltonian;

    const SymMatrix id = SymMatrix::identity(n);
    const SymScalar kinetic_scale = SymScalar::term(ExtScalar::rational(Rational(1, 2)), -1, 0, 0);
    const SymScalar potential_scale =
        SymScalar::term(ExtScalar::rational(Rational(1, 2)), 1, 2, 0);

    result.kinetic_ok = true;
    result.potential_ok = true;
    for (int axis = 0; axis < 3; ++axis) {
        OperatorMonomial p2 = OperatorMonomial::momentum(axis, 2);
        SymMatrix kinetic = id.scaled(kinetic_scale);
        if (remainder.coefficient(p2) != kinetic) result.kinetic_ok = false;
        remainder.add_term(p2, -kinetic);

        OperatorMonomial x2 = OperatorMonomial::position(axis, 2);
        SymMatrix potential = id.scaled(potential_scale);
        if (remainder.coefficient(x2) != potential) result.potential_ok = false;
        remainder.add_term(x2, -potential);
    }

    // Constant term: must be a rational multiple of hbar*omega times the identity.
    SymMatrix constant = remainder.coefficient(OperatorMonomial::unit());
    result.constant = constant.at(0, 0);
    remainder.add_term(OperatorMonomial::unit(), -constant.at(0, 0) * id);
    if (!(constant - constant.at(0, 0) * id).is_zero())
        throw std::runtime_error("constant term is not a multiple of the identity");
    if (result.constant.is_zero()) {
        result.c = 0;
    } else {
        auto term = result.constant.single_term();
        if (!term || term->first != SymScalar::Exponents{0, 1, 1} || !term->second.im.is_zero() ||
            term->second.re.b != 0 || term->second.re.c != 0 || term->second.re.d != 0)
            throw std::runtime_error("constant term is not a rational multiple of hbar*omega");
        result.c = term->second.re.a;
    }

    // What is left must be exactly -kappa (omega/hbar) L.s.
    OperatorPolynomial ls = angular_momentum_dot_spin(model.spin_matrices);
    OperatorPolynomial coupling = ls.scaled(SymScalar::term(ExtScalar::integer(1), 0, 1, -1));

    result.kappa = 0;
    if (!remainder.is_zero()) {
        // Extract the candidate kappa from the first monomial where the
        // coupling has a nonzero entry: remainder = -kappa * coupling there.
        bool found = false;
        for (const auto& [mono, coeff] : coupling.terms()) {
            for (int r = 0; r < n && !found; ++r)
                for (int col = 0; col < n && !found; ++col) {
                    const auto term = coeff.at(r, col).single_term();
                    if (!term) continue;
                    const auto rem_entry = remainder.coefficient(mono).at(r, col).single_term();
                    if (!rem_entry || rem_entry->first != term->first) continue;
                    // Match on whichever surd coordinate is populated.
                    const Rational* cand[8] = {&term->second.re.a, &term->second.re.b,
                                               &term->second.re.c, &term->second.re.d,
                                               &term->second.im.a, &term->second.im.b,
                                               &term->second.im.c, &term->second.im.d};
                    const Rational* rem[8] = {&rem_entry->second.re.a, &rem_entry->second.re.b,
                                              &rem_entry->second.re.c, &rem_entry->second.re.d,
                                              &rem_entry->second.im.a, &rem_entry->second.im.b,
                                              &rem_entry->second.im.c, &rem_entry->second.im.d};
                    for (int q = 0; q < 8; ++q) {
                        if (*cand[q] != 0) {
                            result.kappa = -(*rem[q]) / (*cand[q]);
                            found = true;
                            break;
                        }
                    }
                }
            if (found) break;
        }
        if (!found)
            throw std::runtime_error(
                "reduction does not have the oscillator + spin-orbit form (no L.s overlap)");
    }

    OperatorPolynomial residue =
        remainder + coupling.scaled(SymScalar::rational(result.kappa));
    if (!residue.is_zero())
        throw std::runtime_error(
            "reduction does not have the oscillator + spin-orbit form (nonzero remainder)");
    return result;
}

}  // namespace linwave
