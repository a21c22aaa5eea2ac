#include "linwave/ext_scalar.hpp"

#include <cmath>

namespace linwave {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

void append_term(std::string& out, const Rational& q, const char* surd) {
    if (q == 0) return;
    if (!out.empty()) {
        out += (q > 0) ? "+" : "-";
        out += linwave::to_string(q > 0 ? q : Rational(-q));
    } else {
        out += linwave::to_string(q);
    }
    if (*surd) {
        out += "*";
        out += surd;
    }
}

std::string quad_to_string(const ExtReal& x) {
    std::string out;
    append_term(out, x.a, "");
    append_term(out, x.b, "sqrt2");
    append_term(out, x.c, "sqrt3");
    append_term(out, x.d, "sqrt6");
    if (out.empty()) out = "0";
    // "3*sqrt2" renders as-is; a lone surd keeps its coefficient, e.g. "1*sqrt2".
    return out;
}

bool single_term(const ExtReal& x) {
    int nonzero = 0;
    if (x.a != 0) ++nonzero;
    if (x.b != 0) ++nonzero;
    if (x.c != 0) ++nonzero;
    if (x.d != 0) ++nonzero;
    return nonzero <= 1;
}

}  // namespace

double ExtReal::to_double() const {
    return linwave::to_double(a) + linwave::to_double(b) * kSqrt2 +
           linwave::to_double(c) * kSqrt3 + linwave::to_double(d) * kSqrt6;
}

std::string ExtReal::to_string() const { return quad_to_string(*this); }

std::string ExtScalar::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string im_str = single_term(im) ? im.to_string() : "(" + im.to_string() + ")";
    if (re.is_zero()) return im_str + "*i";
    std::string re_str = single_term(re) ? re.to_string() : "(" + re.to_string() + ")";
    return "(" + re_str + "+" + im_str + "*i)";
}

}  // namespace linwave
