#include "linwave/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "linwave/oscillator.hpp"

namespace linwave {

namespace {

// Eigenvalues of the symmetric tridiagonal matrix with constant off-diagonal
// `off` strictly below `x`, counted through the Sturm (LDL^T) recurrence.
int sturm_count(const std::vector<double>& diag, double off, double x) {
    const double off2 = off * off;
    const double tiny = std::abs(off) * std::numeric_limits<double>::epsilon() +
                        std::numeric_limits<double>::min();
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0) q = tiny;
        q = diag[i] - x - off2 / q;
        if (q < 0.0) ++count;
    }
    return count;
}

double bisect_eigenvalue(const std::vector<double>& diag, double off, int index, double lo,
                         double hi) {
    int iterations = 0;
    while (hi - lo > 1e-11 * std::max(1.0, std::abs(hi))) {
        if (++iterations > 200) throw std::runtime_error("eigenvalue bisection failed to converge");
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted at double precision
        if (sturm_count(diag, off, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<HalfInt> coupled_j_values(int l, HalfInt s) {
    std::vector<HalfInt> values;
    for (int tj = std::abs(2 * l - s.twice); tj <= 2 * l + s.twice; tj += 2)
        values.push_back(HalfInt(tj));
    return values;
}

bool level_order(const Level& a, const Level& b) {
    return std::tie(a.n_r, a.l, a.j.twice) < std::tie(b.n_r, b.l, b.j.twice);
}

}  // namespace

void FdConfig::validate() const {
    if (!(box_radius > 0)) throw std::invalid_argument("box radius must be positive");
    if (grid_points < 10) throw std::invalid_argument("at least 10 grid points required");
    if (eigenvalue_count < 1) throw std::invalid_argument("at least one eigenvalue required");
    if (eigenvalue_count > grid_points)
        throw std::invalid_argument("cannot request more eigenvalues than grid points");
}

std::vector<double> fd_radial_solve(int l, double so_shift, const FdConfig& cfg) {
    cfg.validate();
    if (l < 0) throw std::invalid_argument("l must be non-negative");

    const int n = cfg.grid_points;
    const double h = cfg.box_radius / (n + 1);
    const double inv_h2 = 1.0 / (h * h);
    const double centrifugal = 0.5 * l * (l + 1);

    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) {
        const double r = (i + 1) * h;
        diag[i] = inv_h2 + centrifugal / (r * r) + 0.5 * r * r;
    }
    const double off = -0.5 * inv_h2;

    const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end());
    const double lo = *dmin - 2.0 * std::abs(off);
    const double hi = *dmax + 2.0 * std::abs(off);

    std::vector<double> eigenvalues;
    eigenvalues.reserve(cfg.eigenvalue_count);
    for (int k = 0; k < cfg.eigenvalue_count; ++k)
        eigenvalues.push_back(bisect_eigenvalue(diag, off, k, lo, hi) + so_shift);
    return eigenvalues;
}

std::vector<Level> analytic_spectrum(Spin spin, const Rational& kappa, const Rational& e_max,
                                     int l_max) {
    const HalfInt s(twice(spin));
    std::vector<Level> levels;
    for (int l = 0; l <= l_max; ++l) {
        for (HalfInt j : coupled_j_values(l, s)) {
            const Rational shift = kappa * ls_eigenvalue(j, l, s);
            for (int n_r = 0;; ++n_r) {
                const Rational energy = Rational(2 * n_r + l) - shift;
                if (energy > e_max) break;
                levels.push_back({n_r, l, j, energy, j.twice + 1});
            }
        }
    }
    std::sort(levels.begin(), levels.end(), level_order);
    return levels;
}

SpectrumComparison compare_spectra(Spin spin, const FdConfig& cfg, const Rational& e_max,
                                   int l_max) {
    cfg.validate();
    const SpinModel model = build_model(spin);
    const OperatorPolynomial hamiltonian = reduce_to_second_order(model);
    const SpinOrbitDecomposition decomposition = spin_orbit_decompose(hamiltonian, model);

    SpectrumComparison out;
    out.kappa = decomposition.kappa;

    std::vector<Level> levels = analytic_spectrum(spin, out.kappa, e_max, l_max);

    // Group by (l, j) channel; within a channel levels are consecutive in n_r,
    // so the k-th finite-difference eigenvalue matches n_r = k.
    std::map<std::pair<int, int>, std::vector<Level>> channels;
    for (const Level& level : levels) channels[{level.l, level.j.twice}].push_back(level);

    std::vector<LevelComparison> rows;
    for (const auto& [key, channel_levels] : channels) {
        const int l = key.first;
        const HalfInt j(key.second);
        int max_n_r = 0;
        for (const Level& level : channel_levels) max_n_r = std::max(max_n_r, level.n_r);

        const double lambda = to_double(ls_eigenvalue(j, l, HalfInt(twice(spin))));
        const double shift = -1.5 - to_double(out.kappa) * lambda;
        FdConfig channel_cfg = cfg;
        channel_cfg.eigenvalue_count = max_n_r + 1;
        std::vector<double> numeric = fd_radial_solve(l, shift, channel_cfg);

        for (const Level& level : channel_levels) {
            if (level.n_r >= static_cast<int>(numeric.size()))
                throw std::runtime_error("finite-difference solver returned too few levels");
            LevelComparison row;
            row.level = level;
            row.numeric = numeric[level.n_r];
            row.deviation = row.numeric - to_double(level.energy);
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const LevelComparison& a, const LevelComparison& b) {
                  return level_order(a.level, b.level);
              });
    for (const LevelComparison& row : rows)
        out.max_abs_deviation = std::max(out.max_abs_deviation, std::abs(row.deviation));
    out.rows = std::move(rows);
    return out;
}

}  // namespace linwave
