#pragma once

#include <vector>

#include "linwave/angular.hpp"
#include "linwave/spin_model.hpp"

namespace linwave {

/// One oscillator eigenstate in natural units (hbar = m = omega = 1).
/// E = (2 n_r + l) - kappa * lambda(j, l, s), exact.
struct Level {
    int n_r = 0;
    int l = 0;
    HalfInt j;
    Rational energy;
    int degeneracy = 0;  // 2j + 1
};

struct FdConfig {
    double box_radius = 12.0;  // oscillator lengths
    int grid_points = 4000;    // interior points
    int eigenvalue_count = 1;

    void validate() const;  // throws std::invalid_argument
};

/// The lowest eigenvalues of the radial problem
///   -(1/2) u'' + [ l(l+1)/(2 r^2) + r^2/2 ] u = eps u,  u(0) = u(R) = 0,
/// discretized by central differences on a uniform grid and solved by
/// Sturm-sequence bisection; each returned value is eps + so_shift.
/// Passing so_shift = -3/2 - kappa*lambda aligns the values with the
/// analytic level energies.
std::vector<double> fd_radial_solve(int l, double so_shift, const FdConfig& cfg);

/// All levels with energy <= e_max and l <= l_max, sorted lexicographically
/// by (n_r, l, j). kappa is the spin-orbit strength of the reduced
/// Hamiltonian (2, 1, 2/3 for spins 1/2, 1, 3/2).
std::vector<Level> analytic_spectrum(Spin spin, const Rational& kappa, const Rational& e_max,
                                     int l_max);

struct LevelComparison {
    Level level;
    double numeric = 0.0;
    double deviation = 0.0;  // numeric - analytic
};

struct SpectrumComparison {
    Rational kappa;
    std::vector<LevelComparison> rows;  // sorted by (n_r, l, j)
    double max_abs_deviation = 0.0;
};

/// Builds the spin model, reduces it to second order, extracts kappa, and
/// cross-checks every analytic level (E <= e_max, l <= l_max) against the
/// finite-difference solver channel by channel.
SpectrumComparison compare_spectra(Spin spin, const FdConfig& cfg, const Rational& e_max,
                                   int l_max);

}  // namespace linwave
