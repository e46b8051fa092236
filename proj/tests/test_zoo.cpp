#include <doctest.h>

#include <cmath>
#include <numbers>

#include "higgs/params.hpp"
#include "higgs/zoo.hpp"

using namespace higgs;

namespace {

double worst(const std::vector<IdentityCheck>& checks) {
    double m = 0.0;
    for (const auto& check : checks) m = std::max(m, check.residual);
    return m;
}

const DeformationParams kRef = DeformationParams::make(0.6, 3.0);

}  // namespace

TEST_CASE("parameters derive omega0, theta, s and reject bad gamma") {
    CHECK(kRef.omega0 == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(std::abs(kRef.s - Complex{0.0, 1.0}) < 1e-15);
    CHECK_THROWS_AS(DeformationParams::make(1.0, 0.0), InvalidParams);
    CHECK_THROWS_AS(DeformationParams::make(1.5, 0.0), InvalidParams);
    CHECK_THROWS_AS(DeformationParams::make(-0.1, 0.0), InvalidParams);
}

TEST_CASE("bi-orthogonal frame satisfies its defining identities") {
    const auto frame = make_biorthogonal_frame(kRef);
    CHECK(worst(verify_frame(frame)) < 1e-12);

    // Theorem-2 inner products at omega0 = 0.8
    CHECK(std::abs(frame.phi_vec[0].dot(frame.chi_vec[0]) - Complex{0.8, 0.0}) <
          1e-14);
    CHECK(std::abs(frame.phi_vec[0].dot(frame.chi_vec[1])) < 1e-14);
}

TEST_CASE("undeformed limit: T = identity and sigma^g = sigma") {
    const auto frame = make_biorthogonal_frame(DeformationParams::make(0.0, 1.0));
    CHECK((frame.T - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
          1e-15);
    for (int m = 0; m < 3; ++m)
        CHECK((frame.sigma_gamma[m] - frame.sigma[m]).cwiseAbs().maxCoeff() <
              1e-15);
}

TEST_CASE("degenerate frame is rejected at the omega0 = 0 boundary") {
    DeformationParams singular;
    singular.theta = std::numbers::pi / 2.0;
    singular.phi = std::numbers::pi;
    singular.gamma = 1.0;
    singular.omega0 = 0.0;
    singular.c = 1.0;
    CHECK_THROWS_AS(make_biorthogonal_frame(singular), DegenerateFrame);
}

TEST_CASE("undeformed Jordan-Schwinger family is the su(2) ladder algebra") {
    const auto family = make_js_family(DeformationParams::make(0.0, 0.0));
    CHECK(family.name == "su2");
    CHECK(worst(verify_js(family)) < 1e-14);

    const auto& j0 = family.gen("J0");
    const auto& jp = family.gen("J+");
    const auto& jm = family.gen("J-");
    CHECK(max_coefficient_diff(commutator(j0, jp), jp) < 1e-14);
    CHECK(max_coefficient_diff(commutator(jp, jm), Complex{2.0, 0.0} * j0) <
          1e-14);
}

TEST_CASE("deformed SGA relations and ladder scaling") {
    const auto family = make_js_family(kRef);
    CHECK(worst(verify_js(family)) < 1e-12);

    // [J+,J-] = 2 omega0^{-1} J0 = 2.5 J0 at omega0 = 0.8, p = 1
    CHECK(max_coefficient_diff(
              commutator(family.gen("J+"), family.gen("J-")),
              Complex{2.5, 0.0} * family.gen("J0")) < 1e-13);
}

TEST_CASE("SGA relations hold for sampled gamma and ladder exponents") {
    for (double p : {0.0, 0.5, 1.0}) {
        for (double gamma : {0.05, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9}) {
            const auto family =
                make_js_family(DeformationParams::make(gamma, 2.0, p));
            CHECK(worst(verify_js(family)) < 1e-10);
        }
    }
}

TEST_CASE("deformed generators are witnesses of non-hermiticity") {
    for (double gamma : {0.1, 0.3, 0.6, 0.8}) {
        const auto family = make_js_family(DeformationParams::make(gamma, 1.0));
        CHECK(max_coefficient_diff(formal_adjoint(family.gen("J0")),
                                   family.gen("J0")) > 1e-3);
        CHECK(max_coefficient_diff(formal_adjoint(family.gen("J+")),
                                   family.gen("J-")) > 1e-3);
    }
}

TEST_CASE("gamma -> 0 recovers the undeformed family coefficient-wise") {
    const auto undeformed = make_js_family(DeformationParams::make(0.0, 1.0));
    const auto tiny = make_js_family(DeformationParams::make(1e-12, 1.0));
    for (const auto& name : {"J0", "J+", "J-"})
        CHECK(max_coefficient_diff(tiny.gen(name), undeformed.gen(name)) <
              1e-12);

    // convergence is linear in gamma
    for (double gamma : {1e-4, 1e-6, 1e-8}) {
        const auto family = make_js_family(DeformationParams::make(gamma, 1.0));
        for (const auto& name : {"J0", "J+", "J-"})
            CHECK(max_coefficient_diff(family.gen(name), undeformed.gen(name)) <
                  2.0 * gamma);
    }
}

TEST_CASE("Dyson-Maleev family: relations, Casimir, resolved sign") {
    const auto family = make_dyson_maleev(kRef);
    CHECK(worst(verify_dm(family)) < 1e-12);

    const auto record = resolve_dm_sign(family);
    CHECK(record.resolved_sign == +1);
    CHECK(record.residual_plus < 1e-13);
    CHECK(record.residual_minus > 1.0);

    // [M+, M-] = 2(c - a3†a3) at omega0 = 1
    const auto flat = make_dyson_maleev(DeformationParams::make(0.0, 3.0));
    const auto expected = Complex{2.0, 0.0} *
                          (BosonPolynomial::constant(3, {3.0, 0.0}) -
                           BosonPolynomial::number(3, 3));
    CHECK(max_coefficient_diff(
              commutator(flat.gen("M+"), flat.gen("M-")), expected) < 1e-14);

    CHECK(max_coefficient_diff(formal_adjoint(family.gen("M+")),
                               family.gen("M-")) > 1e-3);
}

TEST_CASE("fused family satisfies the ladder relation (both signs)") {
    for (double gamma : {0.0, 0.3, 0.6, 0.8}) {
        for (double c : {-1.0, 0.5, 2.0, 3.0, 10.0}) {
            const auto family =
                make_higgs_family(DeformationParams::make(gamma, c));
            CHECK(worst(verify_higgs(family)) < 1e-10);
        }
    }
}

TEST_CASE("fused family requires ladder exponent p = 1") {
    CHECK_THROWS_AS(make_higgs_family(DeformationParams::make(0.5, 1.0, 0.5)),
                    InvalidParams);
}

TEST_CASE("undeformed H0 reduces to (J0 - (c - n3))/2") {
    const auto family = make_higgs_family(DeformationParams::make(0.0, 3.0));
    const auto n1 = BosonPolynomial::number(3, 1);
    const auto n2 = BosonPolynomial::number(3, 2);
    const auto n3 = BosonPolynomial::number(3, 3);
    const auto j0 = Complex{0.5, 0.0} * (n1 - n2);
    const auto expected =
        Complex{0.5, 0.0} *
        (j0 - (BosonPolynomial::constant(3, {3.0, 0.0}) - n3));
    CHECK(max_coefficient_diff(family.gen("H0"), expected) < 1e-14);
}

TEST_CASE("cubic commutator: printed form fails, derived form closes") {
    const auto report = verify_eq4(kRef);
    CHECK(report.alpha_central);
    CHECK(report.alpha_centrality_residual < 1e-10);
    // The printed combination of omega0 powers does not close the algebra;
    // the residual is reported with the first offending term.
    CHECK(report.residual_printed > 1e-3);
    CHECK(!report.first_failing_term.empty());
    // Derived commutator identity closes to round-off for every sample.
    CHECK(report.residual_derived < 1e-10);

    for (double gamma : {0.0, 0.3, 0.8}) {
        for (double c : {-1.0, 0.5, 10.0}) {
            const auto r = verify_eq4(DeformationParams::make(gamma, c));
            CHECK(r.residual_derived < 1e-10);
            CHECK(r.alpha_central);
        }
    }
}

TEST_CASE("normative Hamiltonian: central, number-conserving, constant c^2") {
    const auto h1 = build_h1_algebraic(kRef);
    CHECK(h1.conserves_total_number());
    CHECK(std::abs(h1.constant_term() - Complex{9.0, 0.0}) < 1e-12);

    // the printed closed formula is a structurally different operator
    CHECK(max_coefficient_diff(h1, build_h1_printed(kRef, false)) > 1e-3);
    CHECK(max_coefficient_diff(h1, build_h1_printed(kRef, true)) > 1e-3);
}

TEST_CASE("quadratic-table Hamiltonian: entries and reconciliation diff") {
    const auto table = build_h1_table(kRef);
    // B12 entry: i c gamma omega0 * omega0^-2 * ad(1) a(2) = 2.25i
    const auto b12 = table.coefficient(TermKey{{1, 0, 0}, {0, 1, 0}});
    CHECK(std::abs(b12 - Complex{0.0, 2.25}) < 1e-13);

    const auto diff = diff_h1_table(kRef, B11Reading::b33);
    // algebraic - table = c^2 + gamma^2/(4 omega0^2) (n1 - n2)
    auto expected = BosonPolynomial::constant(3, {9.0, 0.0});
    const double coeff = 0.36 / (4.0 * 0.64);
    expected += Complex{coeff, 0.0} * BosonPolynomial::number(3, 1);
    expected += Complex{-coeff, 0.0} * BosonPolynomial::number(3, 2);
    CHECK(max_coefficient_diff(diff.diff, expected) < 1e-12);
    CHECK(!diff.empty_up_to_terms);

    // at gamma = 0 the tables are typo-free up to the omitted constant
    const auto flat = diff_h1_table(DeformationParams::make(0.0, 3.0),
                                    B11Reading::b33);
    CHECK(flat.empty_up_to_terms);
    CHECK(std::abs(flat.diff.constant_term() - Complex{9.0, 0.0}) < 1e-12);

    // the literal overwrite reading leaves the n3 quadratic unmatched
    const auto literal = diff_h1_table(kRef, B11Reading::literal_overwrite);
    CHECK(literal.diff.coefficient(TermKey{{0, 0, 1}, {0, 0, 1}}) !=
          Complex{0.0, 0.0});

    CHECK_THROWS_AS(build_h1_table(DeformationParams::make(0.3, 1.0, 1.0, 2.0)),
                    InvalidParams);
}
