#pragma once

#include <string>

#include "linwave/rational.hpp"

namespace linwave {

/// Half-integer stored as twice its value (so 3/2 has twice == 3).
struct HalfInt {
    int twice = 0;

    HalfInt() = default;
    explicit HalfInt(int twice_value) : twice(twice_value) {}
    static HalfInt from_int(int n) { return HalfInt(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    double value() const { return twice / 2.0; }
    Rational rational() const { return Rational(twice, 2); }

    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

    std::string to_string() const {
        return twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
    }
};

/// Eigenvalue of L.s on a (l, j) channel, in units of hbar^2:
///   (1/2) [ j(j+1) - l(l+1) - s(s+1) ].
/// Requires |l - s| <= j <= l + s with j - s an integer; throws otherwise.
Rational ls_eigenvalue(HalfInt j, int l, HalfInt s);

}  // namespace linwave
