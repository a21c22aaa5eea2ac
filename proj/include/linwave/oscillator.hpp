#pragma once

#include "linwave/operator_poly.hpp"
#include "linwave/spin_model.hpp"

namespace linwave {

/// Sign of the linear-in-coordinates coupling: Standard is p -> p - i m omega eta r,
/// Reversed flips the sign of the coupling (equivalently omega -> -omega).
enum class OscillatorSign { Standard, Reversed };

enum class OmegaMode { Symbolic, Zero };

/// The full first-order operator A E + B.(p - i m omega eta r) + C as an
/// operator polynomial (E carried as a commuting exponent). Verifies that
/// eta anticommutes with every B_i, which routes p - i m omega r to the rows
/// acting on the physical block and p + i m omega r to the physical row.
OperatorPolynomial oscillator_substitute(const SpinModel& model,
                                         OscillatorSign sign = OscillatorSign::Standard,
                                         OmegaMode omega = OmegaMode::Symbolic);

/// Eliminates the auxiliary blocks of the substituted system by explicit
/// block substitution and returns H (n x n coefficients) with
/// E.(physical component) = H.(physical component). With OmegaMode::Zero this
/// must reduce to p^2/2m times the identity.
OperatorPolynomial reduce_to_second_order(const SpinModel& model,
                                          OmegaMode omega = OmegaMode::Symbolic,
                                          OscillatorSign sign = OscillatorSign::Standard);

struct SpinOrbitDecomposition {
    bool kinetic_ok = false;    // every p_i^2 coefficient equals 1/(2m)
    bool potential_ok = false;  // every x_i^2 coefficient equals m omega^2 / 2
    SymScalar constant;         // scalar term, expected c * hbar * omega
    Rational c;                 // constant in units of hbar omega
    Rational kappa;             // strength of the -kappa (omega/hbar) L.s term
};

/// Matches H exactly against
///   p^2/2m + (1/2) m omega^2 r^2 + c hbar omega - kappa (omega/hbar) L.s
/// and extracts c and kappa. Throws std::runtime_error if the match leaves a
/// nonzero remainder.
SpinOrbitDecomposition spin_orbit_decompose(const OperatorPolynomial& hamiltonian,
                                            const SpinModel& model);

}  // namespace linwave
