#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "linwave/matrix_json.hpp"
#include "linwave/sym_matrix.hpp"

using namespace linwave;

namespace {

std::mt19937 rng(20240917);

Rational random_rational() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

ExtReal random_quad() {
    return {random_rational(), random_rational(), random_rational(), random_rational()};
}

ExtScalar random_ext() { return {random_quad(), random_quad()}; }

SymScalar random_sym(int max_terms = 3) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-2, 2);
    SymScalar s;
    const int n = count(rng);
    for (int i = 0; i < n; ++i)
        s += SymScalar::term(random_ext(), exp(rng), exp(rng), exp(rng));
    return s;
}

SymMatrix random_matrix(int rows, int cols) {
    SymMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = random_sym(2);
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("3/4")) == "3/4");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");  // reduced
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(rational_den(parse_rational("-1/3")) == 3);  // denominator stays positive
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("surd products") {
    CHECK(ExtScalar::sqrt2() * ExtScalar::sqrt3() == ExtScalar::sqrt6());
    CHECK(ExtScalar::sqrt2() * ExtScalar::sqrt6() == ExtScalar::sqrt3(2));
    CHECK(ExtScalar::sqrt3() * ExtScalar::sqrt6() == ExtScalar::sqrt2(3));
    CHECK(ExtScalar::sqrt6() * ExtScalar::sqrt6() == ExtScalar::integer(6));
    // (sqrt6/2)^2 = 3/2
    const ExtScalar half_sqrt6 = ExtScalar::sqrt6(Rational(1, 2));
    CHECK(half_sqrt6 * half_sqrt6 == ExtScalar::rational(Rational(3, 2)));
}

TEST_CASE("complex arithmetic in the extension") {
    const ExtScalar one_plus_i = ExtScalar::complex(1, 1);
    const ExtScalar one_minus_i = ExtScalar::complex(1, -1);
    CHECK(one_plus_i * one_minus_i == ExtScalar::integer(2));
    CHECK(one_plus_i.conj() == one_minus_i);
    CHECK((ExtScalar::i() * ExtScalar::i()) == ExtScalar::integer(-1));
}

TEST_CASE("zero iff all coordinates vanish") {
    CHECK(ExtScalar{}.is_zero());
    ExtScalar x = ExtScalar::sqrt2() * ExtScalar::sqrt3() - ExtScalar::sqrt6();
    CHECK(x.is_zero());
    ExtScalar y = ExtScalar::sqrt6(Rational(1, 1000000));
    CHECK_FALSE(y.is_zero());
}

TEST_CASE("field closure: associativity and distributivity, exactly") {
    for (int i = 0; i < 200; ++i) {
        const ExtScalar a = random_ext(), b = random_ext(), c = random_ext();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("numeric evaluation is a homomorphism") {
    for (int i = 0; i < 100; ++i) {
        const ExtScalar a = random_ext(), b = random_ext();
        const auto lhs = (a * b).to_complex();
        const auto rhs = a.to_complex() * b.to_complex();
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
    CHECK(ExtScalar::sqrt6(Rational(1, 2)).to_complex().real() ==
          doctest::Approx(1.224744871391589).epsilon(1e-15));
}

TEST_CASE("symbolic scalars: Laurent arithmetic") {
    const SymScalar hw = SymScalar::hbar() * SymScalar::omega();
    const SymScalar three_half_hw = Rational(3, 2) * hw;
    CHECK(three_half_hw.evaluate(2.0, 1.0, 1.0) == std::complex<double>(1.5, 0.0));

    // exponent cancellation: hbar^-2 * hbar^2 = 1 at any hbar > 0
    const SymScalar cancel = SymScalar::hbar(-2) * SymScalar::hbar(2);
    CHECK(cancel == SymScalar::one());
    CHECK(cancel.evaluate(1.0, 1.0, 0.37) == std::complex<double>(1.0, 0.0));

    // zero substituted into a negative exponent
    CHECK_THROWS_AS(SymScalar::hbar(-1).evaluate(1.0, 1.0, 0.0), std::domain_error);
    // but zero into a positive exponent is fine
    CHECK(SymScalar::omega(2).evaluate(1.0, 0.0, 1.0) == std::complex<double>(0.0, 0.0));

    // exact zero evaluates to exactly 0.0
    const SymScalar zero = SymScalar::hbar() - SymScalar::hbar();
    CHECK(zero.is_zero());
    CHECK(zero.evaluate(3.0, 5.0, 7.0) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("symbolic scalar conjugation touches coefficients only") {
    const SymScalar s = SymScalar::term(ExtScalar::complex(1, 2), 1, 0, -1);
    const SymScalar expected = SymScalar::term(ExtScalar::complex(1, -2), 1, 0, -1);
    CHECK(s.conj() == expected);
}

TEST_CASE("matrix multiplication dimension checks") {
    CHECK_THROWS_AS(SymMatrix(2, 3) * SymMatrix(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix(2, 2) + SymMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("mat_mul: identity, associativity") {
    for (int i = 0; i < 50; ++i) {
        const SymMatrix a = random_matrix(3, 3), b = random_matrix(3, 3), c = random_matrix(3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * SymMatrix::identity(3) == a);
        CHECK(SymMatrix::identity(3) * a == a);
    }
}

TEST_CASE("spin-1 matrix product against the index-sum oracle") {
    // (s1 s2)_{jk} = -hbar^2 eps_{1jl} eps_{2lk}, summed over l, computed here
    // independently of SymMatrix multiplication.
    auto eps = [](int i, int j, int k) {
        if (i == j || j == k || i == k) return 0;
        return ((j - i + 3) % 3 == 1) ? 1 : -1;
    };
    SymMatrix s1(3, 3), s2(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (eps(0, j, k) != 0) s1.at(j, k) = SymScalar::term(ExtScalar::i(-eps(0, j, k)), 0, 0, 1);
            if (eps(1, j, k) != 0) s2.at(j, k) = SymScalar::term(ExtScalar::i(-eps(1, j, k)), 0, 0, 1);
        }
    SymMatrix expected(3, 3);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            int sum = 0;
            for (int l = 0; l < 3; ++l) sum += eps(0, j, l) * eps(1, l, k);
            if (sum != 0)
                expected.at(j, k) = SymScalar::term(ExtScalar::integer(-sum), 0, 0, 2);
        }
    CHECK(s1 * s2 == expected);
    // which is the single entry -hbar^2 at row 2, column 1
    SymMatrix single = SymMatrix::unit_entry(3, 3, 1, 0, SymScalar::term(ExtScalar::integer(-1), 0, 0, 2));
    CHECK(s1 * s2 == single);
}

TEST_CASE("conjugate transpose") {
    // hermitian real symmetric matrix maps to itself
    SymMatrix sym(2, 2);
    sym.at(0, 1) = SymScalar::hbar();
    sym.at(1, 0) = SymScalar::hbar();
    CHECK(sym.conj_transpose() == sym);
    CHECK(sym.is_hermitian());

    // (i hbar E_12)^+ = -i hbar E_21
    SymMatrix e12 = SymMatrix::unit_entry(2, 2, 0, 1, SymScalar::term(ExtScalar::i(), 0, 0, 1));
    SymMatrix e21 = SymMatrix::unit_entry(2, 2, 1, 0, SymScalar::term(ExtScalar::i(-1), 0, 0, 1));
    CHECK(e12.conj_transpose() == e21);

    for (int i = 0; i < 20; ++i) {
        const SymMatrix m = random_matrix(3, 4);
        CHECK(m.conj_transpose().conj_transpose() == m);  // involution
    }
}

TEST_CASE("JSON round trip") {
    for (int i = 0; i < 30; ++i) {
        const SymMatrix m = random_matrix(3, 2);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("JSON rejects malformed input") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"entries":[[]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(
            R"({"rows":1,"cols":1,"entries":[[{"exp":[0,0],"re":["1","0","0","0"],"im":["0","0","0","0"]}]]})")),
        std::invalid_argument);
}
