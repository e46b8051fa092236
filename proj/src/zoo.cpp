#include "higgs/zoo.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

namespace higgs {

namespace {

constexpr int kModes = 3;
const Complex kI{0.0, 1.0};

// c^(1) = diag(-1, 1),  c^(2) = [[0,-1],[1,0]],  c^(3) = [[0,1],[1,0]]
double c_coeff(int m, int j, int k) {
    switch (m) {
        case 1: return (j == k) ? ((j == 0) ? -1.0 : 1.0) : 0.0;
        case 2: return (j == 0 && k == 1) ? -1.0 : (j == 1 && k == 0) ? 1.0 : 0.0;
        case 3: return (j != k) ? 1.0 : 0.0;
        default: throw std::logic_error("c_coeff index");
    }
}

Complex ipow(int e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double epsilon(int l, int m, int n) {
    if (l == m || m == n || l == n) return 0.0;
    // parity of the permutation (l,m,n) of (0,1,2)
    return ((m - l + 3) % 3 == 1) ? 1.0 : -1.0;
}

BosonPolynomial transfer(int from, int to) {  // a†_to a_from
    MultiIndex cre(kModes, 0), ann(kModes, 0);
    cre[to - 1] = 1;
    ann[from - 1] = 1;
    return BosonPolynomial::monomial(kModes, cre, ann, {1.0, 0.0});
}

struct JsGenerators {
    BosonPolynomial j1g, j2g, j0g, jp, jm;
};

JsGenerators js_generators(const DeformationParams& params) {
    const double g = params.gamma;
    const double w0 = params.omega0;
    const auto t12 = transfer(2, 1);
    const auto t21 = transfer(1, 2);
    const auto n1 = BosonPolynomial::number(kModes, 1);
    const auto n2 = BosonPolynomial::number(kModes, 2);

    const auto j1 = Complex{0.5, 0.0} * (t12 + t21);
    const auto j2 = Complex{0.0, 0.5} * (t21 - t12);
    const auto j3 = Complex{0.5, 0.0} * (n1 - n2);

    JsGenerators gen{
        j1 - kI * g * j3,          // J1^g
        j2,                        // J2^g
        j3 + kI * g * j1,          // J0^g = J3^g
        BosonPolynomial(kModes),
        BosonPolynomial(kModes),
    };
    const double wm = std::pow(w0, -params.p);
    const double w1 = std::pow(w0, 1.0 - params.p);
    gen.jp = Complex{wm, 0.0} * gen.j1g + kI * w1 * gen.j2g;
    gen.jm = Complex{wm, 0.0} * gen.j1g - kI * w1 * gen.j2g;
    return gen;
}

BosonPolynomial dm_m0(const DeformationParams& params) {
    const auto n3 = BosonPolynomial::number(kModes, 3);
    return Complex{params.omega0, 0.0} *
           (BosonPolynomial::constant(kModes, {params.c, 0.0}) - n3);
}

BosonPolynomial dm_mp() { return BosonPolynomial::annihilation(kModes, 3); }

BosonPolynomial dm_mm(const DeformationParams& params) {
    // a3† (2c - a3†a3) = 2c a3† - a3†^2 a3, already normal-ordered
    MultiIndex cre(kModes, 0), ann(kModes, 0);
    cre[2] = 2;
    ann[2] = 1;
    return Complex{2.0 * params.c, 0.0} * BosonPolynomial::creation(kModes, 3) -
           BosonPolynomial::monomial(kModes, cre, ann, {1.0, 0.0});
}

BosonPolynomial number_total() {
    return BosonPolynomial::number(kModes, 1) +
           BosonPolynomial::number(kModes, 2) +
           BosonPolynomial::number(kModes, 3);
}

}  // namespace

const BosonPolynomial& AlgebraFamily::gen(const std::string& key) const {
    auto it = generators.find(key);
    if (it == generators.end())
        throw std::out_of_range("family " + name + " has no generator " + key);
    return it->second;
}

TwoLevelFrame make_biorthogonal_frame(const DeformationParams& params) {
    // theta = pi/2 makes T singular; report it as the frame-specific error
    // before the generic parameter validation.
    if (std::abs(params.omega0) < 1e-12)
        throw DegenerateFrame("transformation T is singular (omega0 = 0)");
    params.validate();
    TwoLevelFrame frame;
    frame.params = params;

    const double r = 1.0 / std::sqrt(2.0);
    frame.u[0] << r, r;
    frame.u[1] << r, -r;

    for (int m = 1; m <= 3; ++m) {
        Eigen::Matrix2cd sig = Eigen::Matrix2cd::Zero();
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                sig += c_coeff(m, j, k) * frame.u[j] * frame.u[k].adjoint();
        frame.sigma[m - 1] = (ipow(m + 1) / 2.0) * sig;
    }

    const double half = params.theta / 2.0;
    frame.T = std::cos(half) * Eigen::Matrix2cd::Identity() +
              2.0 * std::cos(params.phi / 2.0) * std::sin(half) * frame.sigma[0] -
              2.0 * std::sin(params.phi / 2.0) * std::sin(half) * frame.sigma[1];

    if (std::abs(frame.T.determinant()) < 1e-12)
        throw DegenerateFrame("transformation T is singular (omega0 = 0)");

    const Eigen::Matrix2cd t_inv = frame.T.inverse();
    for (int j = 0; j < 2; ++j) {
        frame.phi_vec[j] = params.omega0 * frame.T * frame.u[j];
        frame.chi_vec[j] = t_inv.adjoint() * frame.u[j];
    }

    for (int m = 1; m <= 3; ++m) {
        Eigen::Matrix2cd sig = Eigen::Matrix2cd::Zero();
        const double scale = (m == 2) ? 1.0 / params.omega0 : 1.0;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                sig += scale * c_coeff(m, j, k) * frame.phi_vec[j] *
                       frame.chi_vec[k].adjoint();
        frame.sigma_gamma[m - 1] = (ipow(m + 1) / 2.0) * sig;
    }
    return frame;
}

std::vector<IdentityCheck> verify_frame(const TwoLevelFrame& frame) {
    std::vector<IdentityCheck> checks;
    const double g = frame.params.gamma;
    const double w0 = frame.params.omega0;

    double ortho = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            ortho = std::max(ortho,
                             std::abs(frame.u[j].dot(frame.u[k]) -
                                      Complex(j == k ? 1.0 : 0.0, 0.0)));
    checks.push_back({"<u_j|u_k> = delta_jk", ortho});

    checks.push_back(
        {"T hermitian", (frame.T - frame.T.adjoint()).cwiseAbs().maxCoeff()});
    checks.push_back(
        {"det T = omega0", std::abs(frame.T.determinant() - Complex(w0, 0.0))});

    double biortho = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            biortho = std::max(
                biortho, std::abs(frame.phi_vec[j].dot(frame.chi_vec[k]) -
                                  Complex(j == k ? w0 : 0.0, 0.0)));
    checks.push_back({"<phi_j|chi_k> = omega0 delta_jk", biortho});

    double su2 = 0.0;
    double deformed = 0.0;
    for (int l = 0; l < 3; ++l) {
        for (int m = 0; m < 3; ++m) {
            Eigen::Matrix2cd lhs = frame.sigma[l] * frame.sigma[m] -
                                   frame.sigma[m] * frame.sigma[l];
            Eigen::Matrix2cd lhs_g = frame.sigma_gamma[l] * frame.sigma_gamma[m] -
                                     frame.sigma_gamma[m] * frame.sigma_gamma[l];
            Eigen::Matrix2cd rhs = Eigen::Matrix2cd::Zero();
            Eigen::Matrix2cd rhs_g = Eigen::Matrix2cd::Zero();
            for (int n = 0; n < 3; ++n) {
                rhs += kI * epsilon(l, m, n) * frame.sigma[n];
                rhs_g += kI * epsilon(l, m, n) * (1.0 - g * g * (n == 1)) *
                         frame.sigma_gamma[n];
            }
            su2 = std::max(su2, (lhs - rhs).cwiseAbs().maxCoeff());
            deformed = std::max(deformed, (lhs_g - rhs_g).cwiseAbs().maxCoeff());
        }
    }
    checks.push_back({"[sigma_l, sigma_m] = i eps_lmn sigma_n", su2});
    checks.push_back(
        {"[sigma_l^g, sigma_m^g] = i eps_lmn (1 - g^2 d_n2) sigma_n^g",
         deformed});
    return checks;
}

AlgebraFamily make_js_family(const DeformationParams& params) {
    params.validate();
    const auto gen = js_generators(params);
    AlgebraFamily family{params.gamma == 0.0 ? "su2" : "js_gamma", {}, {}, params};
    family.generators.emplace("J0", gen.j0g);
    family.generators.emplace("J+", gen.jp);
    family.generators.emplace("J-", gen.jm);
    family.casimir = js_casimir(params, +1);
    return family;
}

BosonPolynomial js_casimir(const DeformationParams& params, int sign) {
    const auto gen = js_generators(params);
    const double w0 = params.omega0;
    const auto& up = (sign > 0) ? gen.jp : gen.jm;
    const auto& down = (sign > 0) ? gen.jm : gen.jp;
    const auto shifted =
        gen.j0g + BosonPolynomial::constant(kModes, {sign * w0, 0.0});
    return Complex{1.0 / (w0 * w0), 0.0} * normal_multiply(gen.j0g, shifted) +
           Complex{std::pow(w0, 2.0 * params.p - 2.0), 0.0} *
               normal_multiply(down, up);
}

BosonPolynomial dm_casimir(const DeformationParams& params, int sign) {
    const double w0 = params.omega0;
    const auto m0 = dm_m0(params);
    const auto up = (sign > 0) ? dm_mp() : dm_mm(params);
    const auto down = (sign > 0) ? dm_mm(params) : dm_mp();
    const auto shifted =
        m0 + BosonPolynomial::constant(kModes, {sign * w0, 0.0});
    return Complex{1.0 / (w0 * w0), 0.0} * normal_multiply(m0, shifted) +
           normal_multiply(down, up);
}

std::vector<IdentityCheck> verify_js(const AlgebraFamily& family) {
    const auto& params = family.params;
    const double w0 = params.omega0;
    const auto& j0 = family.gen("J0");
    const auto& jp = family.gen("J+");
    const auto& jm = family.gen("J-");
    const auto& cas = *family.casimir;

    std::vector<IdentityCheck> checks;
    checks.push_back({"[J0,J+] = +omega0 J+",
                      max_coefficient_diff(commutator(j0, jp),
                                           Complex{w0, 0.0} * jp)});
    checks.push_back({"[J0,J-] = -omega0 J-",
                      max_coefficient_diff(commutator(j0, jm),
                                           Complex{-w0, 0.0} * jm)});
    checks.push_back(
        {"[J+,J-] = 2 omega0^(1-2p) J0",
         max_coefficient_diff(
             commutator(jp, jm),
             Complex{2.0 * std::pow(w0, 1.0 - 2.0 * params.p), 0.0} * j0)});
    checks.push_back({"C_J upper sign = lower sign",
                      max_coefficient_diff(js_casimir(params, +1),
                                           js_casimir(params, -1))});
    checks.push_back({"[C_J,J0] = 0", commutator(cas, j0).max_abs_coefficient()});
    checks.push_back({"[C_J,J+] = 0", commutator(cas, jp).max_abs_coefficient()});
    checks.push_back({"[C_J,J-] = 0", commutator(cas, jm).max_abs_coefficient()});
    return checks;
}

AlgebraFamily make_dyson_maleev(const DeformationParams& params) {
    params.validate();
    AlgebraFamily family{"dyson_maleev", {}, {}, params};
    family.generators.emplace("M0", dm_m0(params));
    family.generators.emplace("M+", dm_mp());
    family.generators.emplace("M-", dm_mm(params));
    family.casimir = dm_casimir(params, +1);
    return family;
}

DysonMaleevSignRecord resolve_dm_sign(const AlgebraFamily& family) {
    const double w0 = family.params.omega0;
    const auto lhs = commutator(family.gen("M+"), family.gen("M-"));
    const auto rhs = Complex{2.0 / w0, 0.0} * family.gen("M0");
    DysonMaleevSignRecord record;
    record.residual_plus = max_coefficient_diff(lhs, rhs);
    record.residual_minus = max_coefficient_diff(lhs, Complex{-1.0, 0.0} * rhs);
    record.resolved_sign = record.residual_plus <= record.residual_minus ? +1 : -1;
    return record;
}

std::vector<IdentityCheck> verify_dm(const AlgebraFamily& family) {
    const auto& params = family.params;
    const double w0 = params.omega0;
    const auto& m0 = family.gen("M0");
    const auto& mp = family.gen("M+");
    const auto& mm = family.gen("M-");
    const auto& cas = *family.casimir;

    std::vector<IdentityCheck> checks;
    checks.push_back({"[M0,M+] = +omega0 M+",
                      max_coefficient_diff(commutator(m0, mp),
                                           Complex{w0, 0.0} * mp)});
    checks.push_back({"[M0,M-] = -omega0 M-",
                      max_coefficient_diff(commutator(m0, mm),
                                           Complex{-w0, 0.0} * mm)});
    const auto record = resolve_dm_sign(family);
    checks.push_back({"[M+,M-] = (2/omega0) M0 (resolved sign +)",
                      record.residual_plus});
    checks.push_back({"C_M upper sign = lower sign",
                      max_coefficient_diff(dm_casimir(params, +1),
                                           dm_casimir(params, -1))});
    checks.push_back(
        {"C_M = c(c+1) 1",
         max_coefficient_diff(cas, BosonPolynomial::constant(
                                       kModes, {params.c * (params.c + 1.0), 0.0}))});
    checks.push_back({"[C_M,M+] = 0", commutator(cas, mp).max_abs_coefficient()});
    checks.push_back({"[C_M,M-] = 0", commutator(cas, mm).max_abs_coefficient()});
    return checks;
}

AlgebraFamily make_higgs_family(const DeformationParams& params) {
    params.validate();
    if (params.p != 1.0)
        throw InvalidParams("the fused family requires ladder exponent p = 1");
    const auto gen = js_generators(params);
    const auto m0 = dm_m0(params);
    const Complex half{0.5, 0.0};

    AlgebraFamily family{"higgs_gamma", {}, {}, params};
    family.generators.emplace("H0", half * (gen.j0g - m0));
    family.generators.emplace("H+",
                              params.s * normal_multiply(gen.jp, dm_mm(params)));
    family.generators.emplace("H-",
                              params.s * normal_multiply(gen.jm, dm_mp()));
    family.generators.emplace("L0", half * (gen.j0g + m0));
    family.generators.emplace("H1", build_h1_algebraic(params));
    family.casimir = build_h1_algebraic(params);
    return family;
}

BosonPolynomial build_h1_algebraic(const DeformationParams& params) {
    params.validate();
    if (params.p != 1.0)
        throw InvalidParams("H1 requires ladder exponent p = 1");
    const auto gen = js_generators(params);
    const auto two_l0 = gen.j0g + dm_m0(params);
    const double w0 = params.omega0;
    return Complex{1.0 / (w0 * w0), 0.0} * normal_multiply(two_l0, two_l0);
}

BosonPolynomial build_h1_printed(const DeformationParams& params,
                                 bool use_dm_casimir) {
    params.validate();
    const auto gen = js_generators(params);
    const auto cas =
        use_dm_casimir ? dm_casimir(params, +1) : js_casimir(params, +1);
    const auto l0 = Complex{0.5, 0.0} * (gen.j0g + dm_m0(params));
    const double w0 = params.omega0;
    const double b = params.beta;
    return BosonPolynomial::constant(kModes, {b / 8.0, 0.0}) +
           Complex{b / std::pow(w0, 4.0), 0.0} * cas +
           Complex{b / (w0 * w0), 0.0} * normal_multiply(l0, l0);
}

BosonPolynomial build_h1_table(const DeformationParams& params,
                               B11Reading reading) {
    params.validate();
    if (params.beta != 1.0)
        throw InvalidParams("the printed quadratic table assumes beta = 1");
    const double g = params.gamma;
    const double w0 = params.omega0;

    const Complex ig4 = kI * (g / 4.0);
    std::map<std::pair<int, int>, Complex> b_entries;
    b_entries[{1, 1}] = {params.c * w0, 0.0};
    b_entries[{2, 2}] = {-params.c * w0, 0.0};
    b_entries[{1, 2}] = kI * (params.c * g * w0);
    b_entries[{2, 1}] = kI * (params.c * g * w0);  // printed as "C21"
    if (reading == B11Reading::b33)
        b_entries[{3, 3}] = {-2.0 * w0 * w0 * params.c, 0.0};
    else
        b_entries[{1, 1}] = {-2.0 * w0 * w0 * params.c, 0.0};

    std::map<std::array<int, 4>, Complex> v_entries;
    v_entries[{1, 1, 1, 1}] = {0.25, 0.0};
    v_entries[{2, 2, 2, 2}] = {0.25, 0.0};
    v_entries[{1, 1, 2, 2}] = {-0.5, 0.0};
    v_entries[{1, 2, 1, 2}] = {-g * g / 4.0, 0.0};
    v_entries[{2, 1, 2, 1}] = {-g * g / 4.0, 0.0};
    v_entries[{1, 2, 2, 1}] = {-g * g / 2.0, 0.0};
    v_entries[{3, 3, 3, 3}] = {w0 * w0, 0.0};
    v_entries[{1, 1, 1, 2}] = ig4;
    v_entries[{1, 1, 2, 1}] = ig4;
    v_entries[{2, 2, 1, 2}] = -ig4;
    v_entries[{2, 2, 2, 1}] = -ig4;
    v_entries[{1, 2, 1, 1}] = ig4;
    v_entries[{1, 2, 2, 2}] = -ig4;
    v_entries[{2, 1, 1, 1}] = ig4;
    v_entries[{2, 1, 2, 2}] = -ig4;
    v_entries[{1, 1, 3, 3}] = {-w0, 0.0};
    v_entries[{2, 2, 3, 3}] = {w0, 0.0};
    v_entries[{1, 2, 3, 3}] = -kI * (g * w0);
    v_entries[{2, 1, 3, 3}] = -kI * (g * w0);

    BosonPolynomial sum(kModes);
    for (const auto& [ij, coeff] : b_entries)
        sum += coeff * transfer(ij.second, ij.first);
    for (const auto& [ijkl, coeff] : v_entries)
        sum += coeff * normal_multiply(transfer(ijkl[1], ijkl[0]),
                                       transfer(ijkl[3], ijkl[2]));
    return Complex{1.0 / (w0 * w0), 0.0} * sum;
}

Eq4Report verify_eq4(const DeformationParams& params) {
    const auto gen = js_generators(params);
    const auto higgs = make_higgs_family(params);
    const auto& h0 = higgs.gen("H0");
    const auto& hp = higgs.gen("H+");
    const auto& hm = higgs.gen("H-");
    const auto& l0 = higgs.gen("L0");
    const auto& h1 = higgs.gen("H1");
    const double w0 = params.omega0;
    const double b = params.beta;

    Eq4Report report;

    const auto alpha =
        BosonPolynomial::constant(kModes, {b / 8.0, 0.0}) - h1;
    report.alpha_centrality_residual =
        std::max({commutator(alpha, h0).max_abs_coefficient(),
                  commutator(alpha, hp).max_abs_coefficient(),
                  commutator(alpha, hm).max_abs_coefficient()});
    report.alpha_central = report.alpha_centrality_residual < 1e-10;

    const auto h0_cubed = normal_multiply(normal_multiply(h0, h0), h0);
    const auto lhs = commutator(hp, hm);
    const auto rhs = Complex{4.0 * w0, 0.0} * normal_multiply(alpha, h0) +
                     Complex{4.0 * b / w0, 0.0} * h0_cubed;
    const auto residual_poly = lhs - rhs;
    report.residual_printed = residual_poly.max_abs_coefficient();
    if (report.residual_printed >= 1e-10) {
        const auto& [key, coeff] = *residual_poly.terms().begin();
        char buf[96];
        std::snprintf(buf, sizeof buf, "(%.17g%s%.17gi)", coeff.real(),
                      std::signbit(coeff.imag()) ? "-" : "+",
                      std::abs(coeff.imag()));
        report.first_failing_term = std::string(buf) + to_string(key, kModes);
    }

    // Derived closed form of the commutator, kept as an internal oracle.
    const auto cj = js_casimir(params, +1);
    const auto cm = dm_casimir(params, +1);
    const auto m0 = dm_m0(params);
    const auto l0sq = normal_multiply(l0, l0);
    const auto h0sq = normal_multiply(h0, h0);
    const auto derived =
        (params.s * params.s) *
        (Complex{2.0 / w0, 0.0} *
             (normal_multiply(gen.j0g, cm) - normal_multiply(cj, m0)) +
         Complex{4.0 / (w0 * w0 * w0), 0.0} *
             normal_multiply(l0sq - h0sq, h0));
    report.residual_derived = max_coefficient_diff(lhs, derived);
    return report;
}

std::vector<IdentityCheck> verify_higgs(const AlgebraFamily& family) {
    const auto& params = family.params;
    const double w0 = params.omega0;
    const auto& h0 = family.gen("H0");
    const auto& hp = family.gen("H+");
    const auto& hm = family.gen("H-");
    const auto& l0 = family.gen("L0");
    const auto& h1 = family.gen("H1");

    std::vector<IdentityCheck> checks;
    checks.push_back({"[H0,H+] = +omega0 H+",
                      max_coefficient_diff(commutator(h0, hp),
                                           Complex{w0, 0.0} * hp)});
    checks.push_back({"[H0,H-] = -omega0 H-",
                      max_coefficient_diff(commutator(h0, hm),
                                           Complex{-w0, 0.0} * hm)});
    checks.push_back({"[L0,H+] = 0", commutator(l0, hp).max_abs_coefficient()});
    checks.push_back({"[L0,H-] = 0", commutator(l0, hm).max_abs_coefficient()});
    checks.push_back({"[L0,H0] = 0", commutator(l0, h0).max_abs_coefficient()});
    checks.push_back({"[H1,H0] = 0", commutator(h1, h0).max_abs_coefficient()});
    checks.push_back({"[H1,H+] = 0", commutator(h1, hp).max_abs_coefficient()});
    checks.push_back({"[H1,H-] = 0", commutator(h1, hm).max_abs_coefficient()});
    checks.push_back(
        {"[H1,N] = 0",
         commutator(h1, number_total()).max_abs_coefficient()});
    return checks;
}

H1TableDiff diff_h1_table(const DeformationParams& params, B11Reading reading) {
    H1TableDiff result{BosonPolynomial(kModes), "", false};
    const auto algebraic = build_h1_algebraic(params);
    const auto table = build_h1_table(params, reading);
    result.diff = algebraic - table;
    result.empty_up_to_terms = result.diff.without_constant().is_zero();

    std::string note;
    if (reading == B11Reading::b33) {
        note =
            "duplicated B11 assignment placed at B33 (reconciling reading); "
            "remaining diff: constant c^2 (table omits the constant)";
        const double g = params.gamma;
        if (g != 0.0)
            note +=
                " plus gamma^2/(4 omega0^2) (n1 - n2) from the unsymmetrized "
                "V1221 entry (no V2112 printed)";
    } else {
        note =
            "literal overwrite B11 = -2 omega0^2 c leaves B33 empty and "
            "breaks the diagonal; does not reconcile";
    }
    result.summary = note + "; residual terms: " + to_string(result.diff);
    return result;
}

}  // namespace higgs
