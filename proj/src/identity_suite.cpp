#include "linwave/identity_suite.hpp"

#include <stdexcept>

namespace linwave {

namespace {

int epsilon(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

std::string index_pair(int i, int j) {
    return "(i,j)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// First differing monomial of two polynomial matrices, as a witness.
std::optional<CheckWitness> poly_mismatch(const PolyMatrix& actual, const PolyMatrix& expected) {
    if (actual == expected) return std::nullopt;
    PolyMatrix diff = actual - expected;
    const auto& [key, coeff] = *diff.terms().begin();
    return CheckWitness{"monomial " + poly_key_to_string(key), coeff};
}

CheckReport report_equal(std::string name, const SpinModel& model, const PolyMatrix& actual,
                         const PolyMatrix& expected) {
    if (auto witness = poly_mismatch(actual, expected))
        return CheckReport::fail(std::move(name), model.spin, std::move(*witness));
    return CheckReport::pass(std::move(name), model.spin);
}

SymScalar i_hbar() { return SymScalar::term(ExtScalar::i(), 0, 0, 1); }

void require_spin(const SpinModel& model, Spin spin, const char* what) {
    if (model.spin != spin) throw std::invalid_argument(what);
}

}  // namespace

CheckReport check_pauli_product(const SpinModel& model) {
    require_spin(model, Spin::OneHalf, "check_pauli_product requires spin 1/2");
    const std::string name = "pauli-product";
    // sigma_i = s_i / (hbar/2)
    const SymScalar two_inv_hbar = SymScalar::term(ExtScalar::integer(2), 0, 0, -1);
    std::array<SymMatrix, 3> sigma;
    for (int i = 0; i < 3; ++i) sigma[i] = model.spin_matrices[i].scaled(two_inv_hbar);

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SymMatrix expected(2, 2);
            if (i == j) expected = SymMatrix::identity(2);
            for (int k = 0; k < 3; ++k) {
                int eps = epsilon(i, j, k);
                if (eps != 0)
                    expected = expected + sigma[k].scaled(SymScalar::constant(ExtScalar::i(eps)));
            }
            SymMatrix actual = sigma[i] * sigma[j];
            if (actual != expected)
                return CheckReport::fail(name, model.spin,
                                         {index_pair(i, j), actual - expected});
        }
    return CheckReport::pass(name, model.spin);
}

CheckReport check_spin_algebra(const SpinModel& model) {
    const std::string name = "spin-algebra";
    const auto& s = model.spin_matrices;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SymMatrix commutator = s[i] * s[j] - s[j] * s[i];
            SymMatrix expected(model.n, model.n);
            for (int k = 0; k < 3; ++k) {
                int eps = epsilon(i, j, k);
                if (eps != 0) expected = expected + s[k].scaled(i_hbar() * SymScalar::rational(eps));
            }
            if (commutator != expected)
                return CheckReport::fail(name, model.spin,
                                         {"commutator " + index_pair(i, j), commutator - expected});
        }

    SymMatrix casimir = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    const Rational s_val(twice(model.spin), 2);
    SymMatrix expected =
        SymMatrix::identity(model.n).scaled(SymScalar::term(
            ExtScalar::rational(s_val * (s_val + 1)), 0, 0, 2));
    if (casimir != expected)
        return CheckReport::fail(name, model.spin, {"casimir", casimir - expected});
    return CheckReport::pass(name, model.spin);
}

CheckReport check_square_completeness(const SpinModel& model) {
    const std::string name = "square-completeness";
    const SymScalar inv_g2 =
        SymScalar::term(ExtScalar::rational(Rational(4, twice(model.spin) * twice(model.spin))), 0,
                        0, -2);
    const auto& s = model.spin_matrices;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            auto product = [&](int a, int b) {
                SymMatrix sum = s[a] * s[b];
                if (model.aux_dim > 0)
                    sum = sum + model.aux_matrices->at(a) * model.aux_matrices->at(b).conj_transpose();
                return sum;
            };
            // symmetrized coefficient of p_i p_j
            SymMatrix sym = product(i, j) + product(j, i);
            sym = sym.scaled(SymScalar::rational(Rational(1, 2)) * inv_g2);
            SymMatrix expected = i == j ? SymMatrix::identity(model.n)
                                        : SymMatrix::zero(model.n, model.n);
            if (sym != expected)
                return CheckReport::fail(name, model.spin, {index_pair(i, j), sym - expected});
        }
    return CheckReport::pass(name, model.spin);
}

CheckReport check_cross_terms(const SpinModel& model) {
    require_spin(model, Spin::One, "check_cross_terms requires spin 1");
    const std::string name = "cross-terms";
    const auto& s = model.spin_matrices;
    const auto& aux = *model.aux_matrices;

    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            // symmetrized coefficients of p_i p_j in (aux^+.p)(s.p) and (s.p)(aux.p)
            SymMatrix upper = aux[i].conj_transpose() * s[j] + aux[j].conj_transpose() * s[i];
            if (!upper.is_zero())
                return CheckReport::fail(name, model.spin,
                                         {"(aux^+.p)(s.p) at " + index_pair(i, j), upper});
            SymMatrix lower = s[i] * aux[j] + s[j] * aux[i];
            if (!lower.is_zero())
                return CheckReport::fail(name, model.spin,
                                         {"(s.p)(aux.p) at " + index_pair(i, j), lower});

            // zero divergence of the lower block of S(p): p.(s.p) u = 0
            SymMatrix divergence(1, model.n);
            for (int k = 0; k < model.n; ++k)
                divergence.at(0, k) = s[j].at(i, k) + s[i].at(j, k);
            if (!divergence.is_zero())
                return CheckReport::fail(name, model.spin,
                                         {"divergence at " + index_pair(i, j), divergence});
        }

    // The auxiliary component is a scalar: rows 2..aux_dim of the auxiliary
    // block of S(p) vanish identically.
    ConstraintEmbedding embedding = constraint_embedding(model);
    for (const auto& [key, coeff] : embedding.matrix.terms()) {
        for (int r = model.aux_offset() + 1; r < model.lower_offset(); ++r)
            for (int c = 0; c < embedding.matrix.cols(); ++c)
                if (!coeff.at(r, c).is_zero())
                    return CheckReport::fail(
                        name, model.spin,
                        {"auxiliary row " + std::to_string(r + 1) + " of S(p), monomial " +
                             poly_key_to_string(key),
                         coeff.block(r, 0, 1, embedding.matrix.cols())});
    }
    return CheckReport::pass(name, model.spin);
}

CommutationCheck check_commutation_identity(const SpinModel& model) {
    if (model.spin == Spin::OneHalf)
        throw std::invalid_argument("check_commutation_identity requires spin 1 or 3/2");
    const std::string name = "commutation-identity";
    const auto& s = model.spin_matrices;
    const auto& aux = *model.aux_matrices;
    const SymScalar g = model.norm_factor;
    const SymScalar g_squared = g * g;

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            SymMatrix actual = aux[i] * aux[j].conj_transpose() + s[i] * s[j];
            SymMatrix expected(model.n, model.n);
            if (i == j) expected = SymMatrix::identity(model.n).scaled(g_squared);
            for (int k = 0; k < 3; ++k) {
                int eps = epsilon(i, j, k);
                if (eps != 0)
                    expected = expected + s[k].scaled(SymScalar::constant(ExtScalar::i(eps)) * g);
            }
            if (actual != expected)
                return {CheckReport::fail(name, model.spin, {index_pair(i, j), actual - expected}),
                        g_squared};
        }
    CheckReport report = CheckReport::pass(name, model.spin);
    report.details = "delta coefficient = " + g_squared.to_string();
    return {std::move(report), g_squared};
}

CheckReport check_linearization_conditions(const SpinModel& model) {
    const std::string name = "linearization-conditions";
    const int dim = model.total_dim;
    const SymMatrix zero = SymMatrix::zero(dim, dim);
    const SymMatrix& a = model.A;
    const SymMatrix& c = model.C;
    const SymMatrix& a_adj = model.A_adj;
    const SymMatrix& c_adj = model.C_adj;

    auto fail = [&](const char* what, const SymMatrix& diff) {
        return CheckReport::fail(name, model.spin, {what, diff});
    };

    if (SymMatrix lhs = a_adj * a; lhs != zero) return fail("A'A", lhs);
    if (SymMatrix lhs = c_adj * c; lhs != zero) return fail("C'C", lhs);
    SymMatrix two_m = SymMatrix::identity(dim).scaled(SymScalar::term(ExtScalar::integer(2), 1, 0, 0));
    if (SymMatrix lhs = a_adj * c + c_adj * a; lhs != two_m) return fail("A'C + C'A", lhs - two_m);
    for (int i = 0; i < 3; ++i) {
        if (SymMatrix lhs = a_adj * model.B[i] - model.B[i] * a; !lhs.is_zero())
            return fail("A'B_i - B_i A", lhs);
        if (SymMatrix lhs = c_adj * model.B[i] - model.B[i] * c; !lhs.is_zero())
            return fail("C'B_i - B_i C", lhs);
    }
    return CheckReport::pass(name, model.spin);
}

CheckReport check_constrained_square(const SpinModel& model) {
    ConstraintEmbedding embedding = constraint_embedding(model);
    PolyMatrix bp = momentum_term(model);
    PolyMatrix actual = bp * bp * embedding.matrix;
    PolyMatrix expected = momentum_squared(model.total_dim) * embedding.matrix;
    return report_equal("constrained-square", model, actual, expected);
}

CheckReport check_factorization(const SpinModel& model) {
    ConstraintEmbedding embedding = constraint_embedding(model);
    PolyMatrix bp = momentum_term(model);
    const PolyKey energy = PolyMatrix::energy_key();

    PolyMatrix left = PolyMatrix::monomial(energy, model.A_adj) - bp;
    left.add_term({0, 0, 0, 0}, model.C_adj);
    PolyMatrix right = PolyMatrix::monomial(energy, model.A) + bp;
    right.add_term({0, 0, 0, 0}, model.C);

    PolyMatrix actual = left * right * embedding.matrix;

    const SymScalar two_m = SymScalar::term(ExtScalar::integer(2), 1, 0, 0);
    PolyMatrix schrodinger =
        PolyMatrix::monomial(energy, SymMatrix::identity(model.total_dim).scaled(two_m)) -
        momentum_squared(model.total_dim);
    PolyMatrix expected = schrodinger * embedding.matrix;
    return report_equal("factorization", model, actual, expected);
}

Spin1Reduction reduce_spin1_to_7(const SpinModel& model) {
    require_spin(model, Spin::One, "reduce_spin1_to_7 requires spin 1");
    if (model.aux_dim != 3)
        throw std::invalid_argument("reduce_spin1_to_7 requires the 9-component model");
    const std::string name = "seven-component-reduction";

    // Components v2, v3 decouple: their rows must contain only the 2m diagonal.
    const int drop_lo = model.aux_offset() + 1;
    const int drop_hi = model.aux_offset() + 2;
    for (int r = drop_lo; r <= drop_hi; ++r) {
        for (int c = 0; c < model.total_dim; ++c) {
            bool diagonal = (r == c);
            if (!model.A.at(r, c).is_zero() || (!diagonal && !model.C.at(r, c).is_zero()))
                return {model, CheckReport::fail(name, model.spin,
                                                 {"row " + std::to_string(r + 1) + " not pure 2m",
                                                  model.C.block(r, 0, 1, model.total_dim)})};
            for (int i = 0; i < 3; ++i)
                if (!model.B[i].at(r, c).is_zero())
                    return {model,
                            CheckReport::fail(name, model.spin,
                                              {"B_" + std::to_string(i + 1) + " row " +
                                                   std::to_string(r + 1) + " nonzero",
                                               model.B[i].block(r, 0, 1, model.total_dim)})};
        }
        if (model.C.at(r, r) != SymScalar::term(ExtScalar::integer(2), 1, 0, 0))
            return {model, CheckReport::fail(name, model.spin,
                                             {"diagonal of row " + std::to_string(r + 1),
                                              model.C.block(r, r, 1, 1)})};
    }

    std::vector<int> keep;
    for (int i = 0; i < model.total_dim; ++i)
        if (i != drop_lo && i != drop_hi) keep.push_back(i);

    SpinModel reduced = model;
    reduced.aux_dim = 1;
    reduced.total_dim = 7;
    for (int i = 0; i < 3; ++i) {
        reduced.B[i] = model.B[i].submatrix(keep, keep);
        // the surviving auxiliary column of aux_i
        reduced.aux_matrices->at(i) = model.aux_matrices->at(i).block(0, 0, model.n, 1);
    }
    reduced.A = model.A.submatrix(keep, keep);
    reduced.C = model.C.submatrix(keep, keep);
    reduced.A_adj = model.A_adj.submatrix(keep, keep);
    reduced.C_adj = model.C_adj.submatrix(keep, keep);
    reduced.eta = model.eta.submatrix(keep, keep);

    CheckReport factorization = check_factorization(reduced);
    if (!factorization.passed) {
        factorization.name = name;
        return {std::move(reduced), std::move(factorization)};
    }
    CheckReport report = CheckReport::pass(name, model.spin);
    report.details = "reduced dimension = 7";
    return {std::move(reduced), std::move(report)};
}

std::vector<CheckReport> run_all_checks(const SpinModel& model) {
    std::vector<CheckReport> reports;
    reports.push_back(check_spin_algebra(model));
    if (model.spin == Spin::OneHalf) reports.push_back(check_pauli_product(model));
    reports.push_back(check_square_completeness(model));
    if (model.spin == Spin::One) reports.push_back(check_cross_terms(model));
    if (model.spin != Spin::OneHalf)
        reports.push_back(check_commutation_identity(model).report);
    reports.push_back(check_linearization_conditions(model));
    reports.push_back(check_constrained_square(model));
    reports.push_back(check_factorization(model));
    if (model.spin == Spin::One) reports.push_back(reduce_spin1_to_7(model).report);
    return reports;
}

}  // namespace linwave
