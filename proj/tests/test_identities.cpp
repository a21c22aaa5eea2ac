#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linwave/identity_suite.hpp"
#include "linwave/oscillator.hpp"

using namespace linwave;

namespace {

constexpr Spin kAllSpins[] = {Spin::OneHalf, Spin::One, Spin::ThreeHalves};

SymScalar hbar_power(const Rational& coeff, int exp) {
    return SymScalar::term(ExtScalar::rational(coeff), 0, 0, exp);
}

}  // namespace

TEST_CASE("pauli product identity") {
    const SpinModel model = build_model(Spin::OneHalf);
    CHECK(check_pauli_product(model).passed);
    CHECK_THROWS_AS(check_pauli_product(build_model(Spin::One)), std::invalid_argument);

    // pinned instances: sigma_1^2 = 1 (hbar-free), sigma_1 sigma_2 = i sigma_3,
    // sigma_2 sigma_1 = -i sigma_3
    auto sigma = [&](int i) {
        return model.spin_matrices[i].scaled(SymScalar::term(ExtScalar::integer(2), 0, 0, -1));
    };
    CHECK(sigma(0) * sigma(0) == SymMatrix::identity(2));
    CHECK(sigma(0) * sigma(1) == sigma(2).scaled(SymScalar::constant(ExtScalar::i())));
    CHECK(sigma(1) * sigma(0) == sigma(2).scaled(SymScalar::constant(ExtScalar::i(-1))));
    // anticommutator vanishes off-diagonal
    CHECK((sigma(0) * sigma(1) + sigma(1) * sigma(0)).is_zero());
}

TEST_CASE("square completeness, all spins") {
    for (Spin spin : kAllSpins) {
        CAPTURE(to_string(spin));
        CHECK(check_square_completeness(build_model(spin)).passed);
    }
}

TEST_CASE("square completeness: pinned block values") {
    SUBCASE("spin 1: N1 N1^T + s1^2 = hbar^2 * 1") {
        const SpinModel model = build_model(Spin::One);
        const SymMatrix n1 = model.aux_matrices->at(0);
        const SymMatrix s1 = model.spin_matrices[0];
        // independent route: hbar^2 E_11 + hbar^2 diag(0, 1, 1)
        SymMatrix expected(3, 3);
        expected.at(0, 0) = hbar_power(1, 2);
        expected.at(1, 1) = hbar_power(1, 2);
        expected.at(2, 2) = hbar_power(1, 2);
        CHECK(n1 * n1.conj_transpose() + s1 * s1 == expected);
    }
    SUBCASE("spin 3/2: (4/9) hbar^-2 (K1 K1^+ + s1^2) = 1") {
        const SpinModel model = build_model(Spin::ThreeHalves);
        const SymMatrix k1 = model.aux_matrices->at(0);
        const SymMatrix s1 = model.spin_matrices[0];
        const SymMatrix sum = (k1 * k1.conj_transpose() + s1 * s1).scaled(hbar_power({4, 9}, -2));
        CHECK(sum == SymMatrix::identity(4));
    }
}

TEST_CASE("cross terms vanish for spin 1") {
    const SpinModel model = build_model(Spin::One);
    CHECK(check_cross_terms(model).passed);

    // pinned: symmetrized coefficient of p1 p2 in (s.p)(N.p) vanishes
    const auto& s = model.spin_matrices;
    const auto& aux = *model.aux_matrices;
    CHECK((s[0] * aux[1] + s[1] * aux[0]).is_zero());
}

TEST_CASE("cross terms do NOT vanish for spin 3/2") {
    // s3 K3 has entries sqrt2/2 hbar^2 at (2,1) and -sqrt2/2 hbar^2 at (3,2)
    // (computed by direct multiplication), so the spin-1 off-diagonal identity
    // has no spin-3/2 analog and the check refuses that spin.
    const SpinModel model = build_model(Spin::ThreeHalves);
    const SymMatrix product = model.spin_matrices[2] * model.aux_matrices->at(2);
    SymMatrix expected(4, 2);
    expected.at(1, 0) = SymScalar::term(ExtScalar::sqrt2(Rational(1, 2)), 0, 0, 2);
    expected.at(2, 1) = SymScalar::term(ExtScalar::sqrt2(Rational(-1, 2)), 0, 0, 2);
    CHECK(product == expected);
    CHECK_FALSE(product.is_zero());
    CHECK_THROWS_AS(check_cross_terms(model), std::invalid_argument);
}

TEST_CASE("commutation identity and its constant term") {
    CHECK_THROWS_AS(check_commutation_identity(build_model(Spin::OneHalf)), std::invalid_argument);

    SUBCASE("spin 1: constant hbar^2, off-diagonal i hbar s_k") {
        const SpinModel model = build_model(Spin::One);
        const CommutationCheck check = check_commutation_identity(model);
        CHECK(check.report.passed);
        CHECK(check.delta_coefficient == hbar_power(1, 2));

        // (i,j) = (1,2): N1 N2^T + s1 s2 = hbar^2 (E_12 - E_21) = i hbar s3
        const auto& s = model.spin_matrices;
        const auto& aux = *model.aux_matrices;
        const SymMatrix lhs = aux[0] * aux[1].conj_transpose() + s[0] * s[1];
        SymMatrix independent(3, 3);
        independent.at(0, 1) = hbar_power(1, 2);
        independent.at(1, 0) = hbar_power(-1, 2);
        CHECK(lhs == independent);
        CHECK(lhs == s[2].scaled(SymScalar::term(ExtScalar::i(), 0, 0, 1)));

        // (i,j) = (1,1): exactly hbar^2 * 1
        CHECK(aux[0] * aux[0].conj_transpose() + s[0] * s[0] ==
              SymMatrix::identity(3).scaled(hbar_power(1, 2)));
    }

    SUBCASE("spin 3/2: constant is (9/4) hbar^2 — hbar exponent two") {
        const SpinModel model = build_model(Spin::ThreeHalves);
        const CommutationCheck check = check_commutation_identity(model);
        CHECK(check.report.passed);
        CHECK(check.delta_coefficient == hbar_power({9, 4}, 2));
        const auto term = check.delta_coefficient.single_term();
        REQUIRE(term.has_value());
        CHECK(term->first == SymScalar::Exponents{0, 0, 2});

        // (i,j) = (3,3): K3 K3^+ + s3^2 = (9/4) hbar^2 * 1
        const auto& aux = *model.aux_matrices;
        const auto& s = model.spin_matrices;
        CHECK(aux[2] * aux[2].conj_transpose() + s[2] * s[2] ==
              SymMatrix::identity(4).scaled(hbar_power({9, 4}, 2)));
    }
}

TEST_CASE("aux transpose equals aux adjoint for spin 1 (real matrices)") {
    const SpinModel model = build_model(Spin::One);
    for (const SymMatrix& n : *model.aux_matrices) {
        CHECK(n.conj_transpose() == [&] {
            SymMatrix t(n.cols(), n.rows());
            for (int r = 0; r < n.rows(); ++r)
                for (int c = 0; c < n.cols(); ++c) t.at(c, r) = n.at(r, c);
            return t;
        }());
    }
}

TEST_CASE("linearization conditions, all spins") {
    for (Spin spin : kAllSpins) {
        CAPTURE(to_string(spin));
        CHECK(check_linearization_conditions(build_model(spin)).passed);
    }

    SUBCASE("pinned: A'C + C'A = 2m, A'B_1 = B_1 A, A'A = 0") {
        const SpinModel half = build_model(Spin::OneHalf);
        CHECK(half.A_adj * half.C + half.C_adj * half.A ==
              SymMatrix::identity(4).scaled(SymScalar::term(ExtScalar::integer(2), 1, 0, 0)));

        // both sides equal the lower-left sigma_1 block only
        const SymMatrix lhs = half.A_adj * half.B[0];
        const SymMatrix rhs = half.B[0] * half.A;
        CHECK(lhs == rhs);
        SymMatrix expected(4, 4);
        expected.set_block(2, 0,
                           half.spin_matrices[0].scaled(SymScalar::term(ExtScalar::integer(2), 0, 0, -1)));
        CHECK(lhs == expected);

        const SpinModel one = build_model(Spin::One);
        CHECK((one.A_adj * one.A).is_zero());
    }
}

TEST_CASE("constrained square and factorization, all spins") {
    for (Spin spin : kAllSpins) {
        CAPTURE(to_string(spin));
        const SpinModel model = build_model(spin);
        CHECK(check_constrained_square(model).passed);
        CHECK(check_factorization(model).passed);
    }
}

TEST_CASE("failure produces a witness") {
    SpinModel model = build_model(Spin::One);
    // corrupt a spin-block entry (a coupling the embedding actually exercises)
    model.B[0].at(0, 6) = model.B[0].at(0, 6) + SymScalar::hbar();
    const CheckReport report = check_constrained_square(model);
    CHECK_FALSE(report.passed);
    REQUIRE(report.witness.has_value());
    CHECK_FALSE(report.witness->difference.is_zero());
    CHECK(report.witness->location.find("monomial") != std::string::npos);
}

TEST_CASE("report invariant: passed iff no witness") {
    for (Spin spin : kAllSpins)
        for (const CheckReport& report : run_all_checks(build_model(spin))) {
            CHECK(report.passed == !report.witness.has_value());
            CHECK(report.passed);
        }
}

TEST_CASE("seven-component reduction of the spin-1 system") {
    const SpinModel model = build_model(Spin::One);
    CHECK_THROWS_AS(reduce_spin1_to_7(build_model(Spin::OneHalf)), std::invalid_argument);

    const Spin1Reduction reduction = reduce_spin1_to_7(model);
    CHECK(reduction.report.passed);
    CHECK(reduction.reduced.total_dim == 7);  // 6s + 1
    CHECK(reduction.reduced.aux_dim == 1);

    // rows 5 and 6 of the 9-component system carry only the 2m diagonal
    for (int r : {4, 5}) {
        for (int c = 0; c < 9; ++c) {
            CHECK(model.A.at(r, c).is_zero());
            for (int i = 0; i < 3; ++i) CHECK(model.B[i].at(r, c).is_zero());
            if (c != r) CHECK(model.C.at(r, c).is_zero());
        }
        CHECK(model.C.at(r, r) == SymScalar::term(ExtScalar::integer(2), 1, 0, 0));
    }

    // the reduced system satisfies the whole condition set again
    CHECK(check_linearization_conditions(reduction.reduced).passed);
    CHECK(check_constrained_square(reduction.reduced).passed);
    CHECK(check_factorization(reduction.reduced).passed);

    // double reduction is rejected
    CHECK_THROWS_AS(reduce_spin1_to_7(reduction.reduced), std::invalid_argument);
}

TEST_CASE("run_all_checks composition per spin") {
    auto names = [](Spin spin) {
        std::vector<std::string> out;
        for (const auto& report : run_all_checks(build_model(spin))) out.push_back(report.name);
        return out;
    };
    CHECK(names(Spin::OneHalf) ==
          std::vector<std::string>{"spin-algebra", "pauli-product", "square-completeness",
                                   "linearization-conditions", "constrained-square",
                                   "factorization"});
    CHECK(names(Spin::One) ==
          std::vector<std::string>{"spin-algebra", "square-completeness", "cross-terms",
                                   "commutation-identity", "linearization-conditions",
                                   "constrained-square", "factorization",
                                   "seven-component-reduction"});
    CHECK(names(Spin::ThreeHalves) ==
          std::vector<std::string>{"spin-algebra", "square-completeness", "commutation-identity",
                                   "linearization-conditions", "constrained-square",
                                   "factorization"});
}
