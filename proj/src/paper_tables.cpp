#include "higgs/paper_tables.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace higgs {

namespace {

constexpr double kVectorTol = 1e-8;
constexpr double kValueTol = 1e-9;

Eigen::VectorXcd state(int degree,
                       std::initializer_list<std::pair<Monomial, Complex>>
                           coefficients) {
    const auto basis = MonomialBasis::make(degree);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
    for (const auto& [m, coeff] : coefficients) {
        const int idx = basis.index_of(m);
        if (idx < 0) throw std::logic_error("registry state outside basis");
        v(idx) += coeff;
    }
    return v;
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

/// Offsets a with eigenvalue (c - a)^2: a = n3 - m over all blocks.
std::vector<double> block_offsets(int degree) {
    std::vector<double> offsets;
    for (int n3 = degree; n3 >= 0; --n3) {
        const double j = 0.5 * (degree - n3);
        for (int k = 0; k <= degree - n3; ++k)
            offsets.push_back(n3 - (-j + k));
    }
    return offsets;
}

}  // namespace

bool has_paper_tables(int degree) { return degree == 2 || degree == 3; }

std::vector<PaperEigenRow> paper_eigen_rows(int degree) {
    std::vector<PaperEigenRow> rows;
    const Complex i{0.0, 1.0};

    if (degree == 2) {
        rows.push_back({"psi_1", 2, "(c-2)^2",
                        [](double c) { return (c - 2) * (c - 2); },
                        [](const DeformationParams&) {
                            return state(2, {{Monomial{{0, 0, 2}}, {1, 0}}});
                        },
                        std::nullopt,
                        ""});
        rows.push_back(
            {"psi_2", 1, "(c-1/2)^2",
             [](double c) { return (c - 0.5) * (c - 0.5); },
             [i](const DeformationParams& p) {
                 const double k = std::sqrt((1 + p.omega0) / (1 - p.omega0));
                 return state(2, {{Monomial{{0, 1, 1}}, {1, 0}},
                                  {Monomial{{1, 0, 1}}, -i * k}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"psi_3", 1, "(c-3/2)^2",
             [](double c) { return (c - 1.5) * (c - 1.5); },
             [i](const DeformationParams& p) {
                 const double k = std::sqrt((1 - p.omega0) / (1 + p.omega0));
                 return state(2, {{Monomial{{0, 1, 1}}, {1, 0}},
                                  {Monomial{{1, 0, 1}}, -i * k}});
             },
             std::nullopt,
             ""});
        rows.push_back({"psi_4", 0, "0", [](double) { return 0.0; },
                        [i](const DeformationParams& p) {
                            return state(2, {{Monomial{{2, 0, 0}}, {1, 0}},
                                             {Monomial{{0, 2, 0}}, {-1, 0}},
                                             {Monomial{{1, 1, 0}},
                                              i * (2.0 / p.gamma)}});
                        },
                        std::nullopt,
                        ""});
        rows.push_back({"psi_5", 0, "1", [](double) { return 1.0; },
                        [](const DeformationParams&) {
                            return state(2, {{Monomial{{2, 0, 0}}, {1, 0}},
                                             {Monomial{{0, 2, 0}}, {1, 0}}});
                        },
                        std::nullopt,
                        ""});
        rows.push_back(
            {"psi_6", 0, "1", [](double) { return 1.0; },
             [i](const DeformationParams& p) {
                 // braces read as 2i*gamma; the 2i/gamma variant is not in
                 // the c = 0 eigenspace (see tests)
                 return state(2, {{Monomial{{2, 0, 0}}, {1, 0}},
                                  {Monomial{{0, 2, 0}}, {-1, 0}},
                                  {Monomial{{1, 1, 0}}, i * (2.0 * p.gamma)}});
             },
             std::nullopt,
             "printed coefficient {2i}{gamma} read as 2i*gamma"});
        return rows;
    }

    if (degree == 3) {
        rows.push_back({"chi_1", 3, "(c-3)^2",
                        [](double c) { return (c - 3) * (c - 3); },
                        [](const DeformationParams&) {
                            return state(3, {{Monomial{{0, 0, 3}}, {1, 0}}});
                        },
                        std::nullopt,
                        ""});
        rows.push_back(
            {"chi_2", 2, "(c-3/2)^2",
             [](double c) { return (c - 1.5) * (c - 1.5); },
             [i](const DeformationParams& p) {
                 const double k = std::sqrt((1 - p.omega0) / (1 + p.omega0));
                 return state(3, {{Monomial{{1, 0, 2}}, {1, 0}},
                                  {Monomial{{0, 1, 2}}, i * k}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_3", 2, "(c-5/2)^2",
             [](double c) { return (c - 2.5) * (c - 2.5); },
             [i](const DeformationParams& p) {
                 const double k = std::sqrt((1 + p.omega0) / (1 - p.omega0));
                 return state(3, {{Monomial{{1, 0, 2}}, {1, 0}},
                                  {Monomial{{0, 1, 2}}, i * k}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_4", 1, "(c-1)^2",
             [](double c) { return (c - 1) * (c - 1); },
             [i](const DeformationParams& p) {
                 return state(3, {{Monomial{{2, 0, 1}}, -i * (p.gamma / 2)},
                                  {Monomial{{0, 2, 1}}, i * (p.gamma / 2)},
                                  {Monomial{{1, 1, 1}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_5", 1, "c^2", [](double c) { return c * c; },
             [i](const DeformationParams& p) {
                 const double kp = std::sqrt((1 + p.omega0) / (1 - p.omega0));
                 const double km = std::sqrt((1 - p.omega0) / (1 + p.omega0));
                 return state(3, {{Monomial{{2, 0, 1}}, -i * (kp / 2)},
                                  {Monomial{{0, 2, 1}}, i * (km / 2)},
                                  {Monomial{{1, 1, 1}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_6", 1, "(c-2)^2",
             [](double c) { return (c - 2) * (c - 2); },
             [i](const DeformationParams& p) {
                 const double kp = std::sqrt((1 + p.omega0) / (1 - p.omega0));
                 const double km = std::sqrt((1 - p.omega0) / (1 + p.omega0));
                 return state(3, {{Monomial{{2, 0, 1}}, -i * (km / 2)},
                                  {Monomial{{0, 2, 1}}, i * (kp / 2)},
                                  {Monomial{{1, 1, 1}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_7", 0, "1/4", [](double) { return 0.25; },
             [i](const DeformationParams& p) {
                 // literal text repeats |3,0,0>; both printed coefficients
                 // land on it
                 const double w2 = p.omega0 * p.omega0;
                 const double r = (3 - 3 * w2) / (3 + w2);
                 const double q = 6 * p.gamma / (3 + w2);
                 return state(3, {{Monomial{{3, 0, 0}}, Complex{r, 0} + i * q},
                                  {Monomial{{1, 2, 0}}, {1, 0}}});
             },
             [i](const DeformationParams& p) {
                 const double w2 = p.omega0 * p.omega0;
                 const double r = (3 - 3 * w2) / (3 + w2);
                 const double q = 6 * p.gamma / (3 + w2);
                 return state(3, {{Monomial{{3, 0, 0}}, {r, 0}},
                                  {Monomial{{0, 3, 0}}, i * q},
                                  {Monomial{{1, 2, 0}}, {1, 0}}});
             },
             "duplicated ket |3,0,0>: second occurrence read as |0,3,0>"});
        rows.push_back(
            {"chi_8", 0, "1/4", [](double) { return 0.25; },
             [i](const DeformationParams& p) {
                 const double w2 = p.omega0 * p.omega0;
                 const double r = (3 - 3 * w2) / (3 + w2);
                 const double q = 6 * p.gamma / (3 + w2);
                 return state(3, {{Monomial{{3, 0, 0}}, -i * q},
                                  {Monomial{{0, 3, 0}}, {r, 0}},
                                  {Monomial{{2, 1, 0}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_9", 0, "9/4", [](double) { return 2.25; },
             [i](const DeformationParams& p) {
                 return state(3, {{Monomial{{3, 0, 0}}, {1, 0}},
                                  {Monomial{{0, 3, 0}}, i * (2.0 / p.gamma)},
                                  {Monomial{{1, 2, 0}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        rows.push_back(
            {"chi_10", 0, "9/4", [](double) { return 2.25; },
             [i](const DeformationParams& p) {
                 return state(3, {{Monomial{{3, 0, 0}}, -i * (2.0 / p.gamma)},
                                  {Monomial{{0, 3, 0}}, {1, 0}},
                                  {Monomial{{2, 1, 0}}, {1, 0}}});
             },
             std::nullopt,
             ""});
        return rows;
    }

    throw std::invalid_argument("no printed tables for degree " +
                                std::to_string(degree));
}

SpectrumPaperCheck check_spectrum_against_paper(const SpectralReport& report,
                                                const MonomialBasis& basis) {
    SpectrumPaperCheck check;
    const int degree = report.degree;
    const double c = report.params.c;

    // resolved model: (c - a)^2 over the block offsets
    std::vector<double> expected = block_offsets(degree);
    for (auto& a : expected) a = (c - a) * (c - a);
    std::sort(expected.begin(), expected.end());
    std::vector<double> actual(report.eigenvalues.size());
    for (Eigen::Index k = 0; k < report.eigenvalues.size(); ++k)
        actual[k] = report.eigenvalues(k).real();
    std::sort(actual.begin(), actual.end());
    double deviation = 0.0;
    for (std::size_t k = 0; k < actual.size(); ++k)
        deviation = std::max(deviation, std::abs(actual[k] - expected[k]));
    check.max_eigenvalue_deviation = deviation;
    check.matches_resolved = deviation < kValueTol &&
                             report.max_imag < kValueTol;

    if (!has_paper_tables(degree)) return check;
    const bool vectors_defined = report.params.gamma > 1e-12;

    for (const auto& row : paper_eigen_rows(degree)) {
        const std::string location =
            "n=" + std::to_string(degree) + " table, " + row.id;
        if (!vectors_defined) {
            if (row.id == paper_eigen_rows(degree).front().id)
                check.discrepancies.push_back(
                    {location, "eigenvector table",
                     "vector comparison skipped",
                     "printed states carry 1/gamma factors; undefined at "
                     "gamma = 0"});
            continue;
        }

        const int block_idx = degree - row.n3;
        const auto& block = basis.blocks()[block_idx];
        const Eigen::VectorXcd printed = row.vector(report.params);
        const Eigen::VectorXcd resolved =
            row.resolved ? (*row.resolved)(report.params) : printed;

        // eigen-residual against each block eigenvalue; robust when the
        // block is internally degenerate at special c
        auto eigen_residual = [&](const Eigen::VectorXcd& v,
                                  double lambda) {
            const Eigen::VectorXcd image = report.matrix * v;
            return fock_norm(basis, image - lambda * v) /
                   (fock_norm(basis, v) * std::max(1.0, std::abs(lambda)));
        };
        double best_residual = 0.0;
        double computed_value = 0.0;
        for (int k = 0; k < block.size; ++k) {
            const double lambda =
                report.eigenvalues(block.offset + k).real();
            const double r = eigen_residual(resolved, lambda);
            if (k == 0 || r < best_residual) {
                best_residual = r;
                computed_value = lambda;
            }
        }
        const double printed_value = row.eigenvalue(c);
        const bool vector_ok = best_residual < kVectorTol;
        const bool value_ok =
            std::abs(computed_value - printed_value) <
            kValueTol * std::max(1.0, std::abs(computed_value));

        if (row.resolved) {
            const double literal_residual =
                eigen_residual(printed, computed_value);
            check.discrepancies.push_back(
                {location, "printed eigenvector (literal reading)",
                 vector_ok ? "resolved reading matches (residual " +
                                 format_value(best_residual) + ")"
                           : "neither reading is an eigenvector",
                 row.resolution_note + "; literal-reading residual " +
                     format_value(literal_residual)});
        }

        if (vector_ok && value_ok) continue;
        if (vector_ok && !value_ok) {
            check.discrepancies.push_back(
                {location, "eigenvalue " + row.eigenvalue_text,
                 "eigenvalue " + format_value(computed_value) +
                     " (printed state is an eigenvector)",
                 "printed n3=0 rows are the c -> 0 limit of the derived "
                 "blocks"});
        } else {
            check.discrepancies.push_back(
                {location,
                 "eigenstate with eigenvalue " + row.eigenvalue_text,
                 "not an eigenvector (best residual " +
                     format_value(best_residual) + " against eigenvalue " +
                     format_value(computed_value) + ")",
                 "block eigenvalues are (c - " + std::to_string(row.n3) +
                     " + m)^2; printed row is the c -> 0 degenerate "
                     "combination"});
        }
    }
    return check;
}

std::vector<ReferenceState> paper_representatives(
    int degree, const DeformationParams& params) {
    if (params.gamma <= 1e-12)
        throw std::invalid_argument(
            "printed representatives carry 1/gamma factors; undefined at "
            "gamma = 0");
    std::vector<ReferenceState> states;
    for (const auto& row : paper_eigen_rows(degree)) {
        const auto vec =
            row.resolved ? (*row.resolved)(params) : row.vector(params);
        states.push_back({row.id, vec});
    }
    return states;
}

std::vector<PaperPtRow> paper_pt_rows(int degree) {
    if (degree == 2) {
        return {
            {"1", {"psi_1", "psi_2", "psi_3", "psi_4", "psi_5", "psi_6"}, {}},
            {"2", {"psi_1", "psi_4", "psi_5", "psi_6"}, {"psi_2", "psi_3"}},
            {"3", {"psi_1", "psi_4", "psi_5", "psi_6"}, {"psi_2", "psi_3"}},
            {"13", {"psi_1", "psi_4", "psi_5", "psi_6"}, {"psi_2", "psi_3"}},
            {"23", {"psi_1", "psi_2", "psi_3", "psi_4", "psi_5", "psi_6"}, {}},
            // Remark: C3(12)/C3(123) are not symmetries; psi_1, psi_5 adopt
            {"12", {"psi_1", "psi_5"}, {"psi_2", "psi_3", "psi_4", "psi_6"}},
            {"123", {"psi_1", "psi_5"}, {"psi_2", "psi_3", "psi_4", "psi_6"}},
        };
    }
    if (degree == 3) {
        return {
            {"1",
             {"chi_1", "chi_8", "chi_10"},
             {"chi_2", "chi_3", "chi_4", "chi_5", "chi_6", "chi_7", "chi_9"}},
            {"2",
             {"chi_1", "chi_2", "chi_3", "chi_7", "chi_9"},
             {"chi_4", "chi_5", "chi_6", "chi_8", "chi_10"}},
            {"3",
             {"chi_7", "chi_8", "chi_9", "chi_10"},
             {"chi_1", "chi_2", "chi_3", "chi_4", "chi_5", "chi_6"}},
            {"13",
             {"chi_4", "chi_5", "chi_6", "chi_8", "chi_10"},
             {"chi_1", "chi_2", "chi_3", "chi_7", "chi_9"}},
            {"23",
             {"chi_2", "chi_3", "chi_4", "chi_5", "chi_6", "chi_7", "chi_9"},
             {"chi_1", "chi_8", "chi_10"}},
        };
    }
    throw std::invalid_argument("no printed PT tables for degree " +
                                std::to_string(degree));
}

std::vector<std::string> paper_symmetry_specs() {
    return {"1", "2", "3", "13", "23"};
}

std::vector<std::string> paper_non_symmetry_specs() { return {"12", "123"}; }

PtPaperCheck check_pt_against_paper(const SymmetryReport& report, int degree) {
    PtPaperCheck check;
    const auto rows = paper_pt_rows(degree);
    const auto symmetry_specs = paper_symmetry_specs();
    const auto non_symmetry_specs = paper_non_symmetry_specs();

    for (const auto& spec_result : report.specs) {
        std::string digits;
        for (int j = 0; j < 3; ++j)
            if (spec_result.spec.flipped[j]) digits += static_cast<char>('1' + j);

        // operator-level claims
        const bool claimed_symmetry =
            std::find(symmetry_specs.begin(), symmetry_specs.end(), digits) !=
            symmetry_specs.end();
        const bool claimed_broken =
            std::find(non_symmetry_specs.begin(), non_symmetry_specs.end(),
                      digits) != non_symmetry_specs.end();
        if (claimed_symmetry && !spec_result.is_symmetry)
            check.discrepancies.push_back(
                {spec_result.spec.name() + " operator symmetry",
                 "C H1 C = H1 (claimed symmetry)",
                 "residual " + format_value(spec_result.operator_residual),
                 "imaginary transfer entries conjugate without sign "
                 "compensation"});
        if (claimed_broken && spec_result.is_symmetry)
            check.discrepancies.push_back(
                {spec_result.spec.name() + " operator symmetry",
                 "claimed non-symmetry", "residual below tolerance", ""});

        const auto row = std::find_if(
            rows.begin(), rows.end(),
            [&](const PaperPtRow& r) { return r.spec == digits; });
        if (row == rows.end()) continue;

        int mismatches = 0;
        for (const auto& state : spec_result.states) {
            const bool printed_symmetric =
                std::find(row->symmetric.begin(), row->symmetric.end(),
                          state.id) != row->symmetric.end();
            const bool printed_breaking =
                std::find(row->breaking.begin(), row->breaking.end(),
                          state.id) != row->breaking.end();
            if (!printed_symmetric && !printed_breaking) continue;
            if (state.strict == printed_symmetric) continue;
            ++mismatches;
            check.discrepancies.push_back(
                {spec_result.spec.name() + " on " + state.id,
                 printed_symmetric ? "symmetric" : "breaking",
                 std::string(state.strict ? "symmetric" : "breaking") +
                     " (strict residual " +
                     format_value(state.residual_strict) + ", projective " +
                     format_value(state.residual_projective) + ")",
                 state.projective && !state.strict
                     ? "projectively symmetric with unimodular factor"
                     : ""});
        }
        check.row_mismatches.emplace_back(spec_result.spec.name(), mismatches);
    }
    return check;
}

std::vector<PaperDegeneracyClaim> paper_degeneracy_claims(int degree) {
    if (degree == 2) {
        return {
            {2, 0.5, 0.0, 2},  {2, 1.5, 0.0, 2},    {2, 2.0, 0.0, 2},
            {2, 1.0, 1.0, 3},  {2, 1.25, 0.5625, 2}, {2, 1.75, 0.0625, 2},
            {2, 1.0, 0.25, 2},
        };
    }
    if (degree == 3) {
        return {{3, 1.5, 2.25, 4}};
    }
    return {};
}

std::vector<double> derived_degeneracy_points(int degree, double c_min,
                                              double c_max) {
    const auto offsets = block_offsets(degree);
    std::set<double> points;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        for (std::size_t j = i + 1; j < offsets.size(); ++j) {
            if (offsets[i] == offsets[j]) continue;  // permanent pair
            const double mid = 0.5 * (offsets[i] + offsets[j]);
            if (mid >= c_min - 1e-12 && mid <= c_max + 1e-12)
                points.insert(mid);
        }
    }
    return {points.begin(), points.end()};
}

}  // namespace higgs
