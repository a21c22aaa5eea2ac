#include "linwave/angular.hpp"

#include <cstdlib>
#include <stdexcept>

namespace linwave {

Rational ls_eigenvalue(HalfInt j, int l, HalfInt s) {
    if (l < 0 || j.twice < 0 || s.twice < 0)
        throw std::invalid_argument("quantum numbers must be non-negative");
    if ((j.twice - s.twice) % 2 != 0)
        throw std::invalid_argument("j and s must differ by an integer");
    if (j.twice < std::abs(2 * l - s.twice) || j.twice > 2 * l + s.twice)
        throw std::invalid_argument("(j, l, s) violates the triangle rule");
    // j(j+1) = tj(tj+2)/4 with tj = 2j, and likewise for s.
    const Rational jj(static_cast<long long>(j.twice) * (j.twice + 2), 4);
    const Rational ll(static_cast<long long>(l) * (l + 1));
    const Rational ss(static_cast<long long>(s.twice) * (s.twice + 2), 4);
    return (jj - ll - ss) / 2;
}

}  // namespace linwave
