#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linwave/spin_model.hpp"

namespace linwave {

/// First failure site of a check: a human-readable location (index pair or
/// monomial) and the exact difference matrix at that site.
struct CheckWitness {
    std::string location;
    SymMatrix difference;
};

struct CheckReport {
    std::string name;
    Spin spin;
    bool passed = false;
    std::optional<CheckWitness> witness;  // present iff !passed
    std::optional<std::string> details;   // extra computed data, e.g. a constant term

    static CheckReport pass(std::string name, Spin spin) {
        return {std::move(name), spin, true, std::nullopt, std::nullopt};
    }
    static CheckReport fail(std::string name, Spin spin, CheckWitness witness) {
        return {std::move(name), spin, false, std::move(witness), std::nullopt};
    }
};

/// sigma_i sigma_j = delta_ij + i eps_ijk sigma_k for all nine index pairs.
/// Spin 1/2 only (throws otherwise).
CheckReport check_pauli_product(const SpinModel& model);

/// [s_i, s_j] = i hbar eps_ijk s_k and s^2 = s(s+1) hbar^2, exactly.
CheckReport check_spin_algebra(const SpinModel& model);

/// Symmetrized completeness on the physical block:
/// g^-2 (aux_j aux_i^+ + s_j s_i) p_j p_i = p^2, i.e. the (1,1) block of
/// (1/2){B_i, B_j} equals delta_ij.
CheckReport check_square_completeness(const SpinModel& model);

/// Spin 1 only: the off-diagonal blocks (aux^+.p)(s.p) and (s.p)(aux.p)
/// vanish as polynomials in commuting p, the lower block of S(p) has zero
/// divergence against p, and the auxiliary block of S(p) is a scalar (only
/// its first row is nonzero). Throws for other spins: for spin 3/2 the
/// corresponding products are nonzero and no such identity holds.
CheckReport check_cross_terms(const SpinModel& model);

struct CommutationCheck {
    CheckReport report;
    SymScalar delta_coefficient;  // computed coefficient of delta_ij (expected g^2)
};

/// aux_i aux_j^+ + s_i s_j = i g eps_ijk s_k + g^2 delta_ij for all nine
/// pairs; also reports the computed delta coefficient. Spins 1 and 3/2.
CommutationCheck check_commutation_identity(const SpinModel& model);

/// A'A = 0, C'C = 0, A'B_i - B_i A = 0, A'C + C'A = 2m, C'B_i - B_i C = 0,
/// with A' = C/2m and C' = 2mA.
CheckReport check_linearization_conditions(const SpinModel& model);

/// B_j B_i p_j p_i S(p) = p^2 S(p) as an exact polynomial identity.
CheckReport check_constrained_square(const SpinModel& model);

/// (A'E - B.p + C')(A E + B.p + C) S(p) = (2mE - p^2) S(p) as an exact
/// polynomial identity in the commuting symbols E, p1, p2, p3.
CheckReport check_factorization(const SpinModel& model);

struct Spin1Reduction {
    SpinModel reduced;  // 7-component model
    CheckReport report;
};

/// Deletes the two all-zero auxiliary rows/columns of the spin-1 system
/// (the rows reading 2m v_{2,3} = 0), producing the 7-component model, and
/// verifies the reduced system still factorizes. Spin 1 only.
Spin1Reduction reduce_spin1_to_7(const SpinModel& model);

/// Every check applicable to the model's spin, in a fixed order.
std::vector<CheckReport> run_all_checks(const SpinModel& model);

}  // namespace linwave
