#include "higgs/ptsym.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace higgs {

ConjugationSpec ConjugationSpec::from_modes(std::initializer_list<int> modes) {
    ConjugationSpec spec;
    for (int m : modes) {
        if (m < 1 || m > 3)
            throw std::invalid_argument("conjugation mode outside 1..3");
        spec.flipped[m - 1] = true;
    }
    return spec;
}

ConjugationSpec ConjugationSpec::parse(const std::string& digits) {
    ConjugationSpec spec;
    if (digits.empty())
        throw std::invalid_argument("empty conjugation spec");
    for (char ch : digits) {
        if (ch < '1' || ch > '3')
            throw std::invalid_argument("conjugation spec digit outside 1..3: " +
                                        digits);
        spec.flipped[ch - '1'] = true;
    }
    return spec;
}

std::string ConjugationSpec::name() const {
    std::string modes;
    for (int j = 0; j < 3; ++j)
        if (flipped[j]) modes += static_cast<char>('1' + j);
    return "C3(" + modes + ")";
}

double ConjugationSpec::parity(const Monomial& m) const {
    std::uint32_t sum = 0;
    for (int j = 0; j < 3; ++j)
        if (flipped[j]) sum += m.exponents[j];
    return (sum % 2 == 0) ? 1.0 : -1.0;
}

Eigen::VectorXcd apply_conjugation(const ConjugationSpec& spec,
                                   const MonomialBasis& basis,
                                   const Eigen::VectorXcd& state) {
    if (state.size() != static_cast<Eigen::Index>(basis.size()))
        throw std::invalid_argument("state length does not match basis size");
    Eigen::VectorXcd out(state.size());
    for (Eigen::Index i = 0; i < state.size(); ++i)
        out(i) = spec.parity(basis.at(i)) * std::conj(state(i));
    return out;
}

Eigen::MatrixXcd conjugated_operator(const ConjugationSpec& spec,
                                     const MonomialBasis& basis,
                                     const Eigen::MatrixXcd& mat) {
    Eigen::MatrixXcd out(mat.rows(), mat.cols());
    for (Eigen::Index r = 0; r < mat.rows(); ++r) {
        const double pr = spec.parity(basis.at(r));
        for (Eigen::Index c = 0; c < mat.cols(); ++c) {
            const double pc = spec.parity(basis.at(c));
            out(r, c) = pr * pc * std::conj(mat(r, c));
        }
    }
    return out;
}

double operator_symmetry_residual(const ConjugationSpec& spec,
                                  const OperatorMatrix& mat) {
    return (conjugated_operator(spec, mat.basis, mat.entries) - mat.entries)
        .cwiseAbs()
        .maxCoeff();
}

OperatorMatrix fock_adjoint(const OperatorMatrix& mat) {
    OperatorMatrix out{mat.basis, mat.entries.adjoint()};
    for (Eigen::Index r = 0; r < out.entries.rows(); ++r)
        for (Eigen::Index c = 0; c < out.entries.cols(); ++c)
            out.entries(r, c) *=
                mat.basis.gram_weight(c) / mat.basis.gram_weight(r);
    return out;
}

double fock_norm(const MonomialBasis& basis, const Eigen::VectorXcd& v) {
    return std::sqrt(fock_dot(basis, v, v).real());
}

Complex fock_dot(const MonomialBasis& basis, const Eigen::VectorXcd& a,
                 const Eigen::VectorXcd& b) {
    Complex sum{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.size(); ++i)
        sum += std::conj(a(i)) * b(i) * basis.gram_weight(i);
    return sum;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::symmetric_strict: return "symmetric_strict";
        case Verdict::symmetric_projective: return "symmetric_projective";
        default: return "breaking";
    }
}

namespace {

StateClassification classify_one(const ConjugationSpec& spec,
                                 const MonomialBasis& basis,
                                 const std::string& id,
                                 const Eigen::VectorXcd& state,
                                 bool spec_is_symmetry) {
    StateClassification out;
    out.id = id;
    const double norm = fock_norm(basis, state);
    const Eigen::VectorXcd image = apply_conjugation(spec, basis, state);

    out.residual_strict = fock_norm(basis, image - state) / norm;
    out.strict = out.residual_strict < kSymmetryTolerance;

    const Complex overlap = fock_dot(basis, state, image);
    if (std::abs(overlap) > 0.0) {
        out.lambda = overlap / std::abs(overlap);
        out.residual_projective =
            fock_norm(basis, image - out.lambda * state) / norm;
    } else {
        out.lambda = Complex{0.0, 0.0};
        out.residual_projective = std::sqrt(2.0);
    }
    out.projective = out.strict ||
                     out.residual_projective < kSymmetryTolerance;
    if (out.strict) out.lambda = Complex{1.0, 0.0};

    out.verdict = out.strict   ? Verdict::symmetric_strict
                  : out.projective ? Verdict::symmetric_projective
                                   : Verdict::breaking;
    out.adopting = out.strict && !spec_is_symmetry;
    return out;
}

/// Fock-weighted distance of the conjugated cluster span from itself.
double span_invariance_residual(const ConjugationSpec& spec,
                                const MonomialBasis& basis,
                                const Eigen::MatrixXcd& span) {
    const Eigen::Index dim = span.rows();
    Eigen::VectorXd root_weights(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        root_weights(i) = std::sqrt(basis.gram_weight(i));

    Eigen::MatrixXcd weighted = span;
    for (Eigen::Index i = 0; i < dim; ++i) weighted.row(i) *= root_weights(i);
    const auto decomposition = weighted.completeOrthogonalDecomposition();

    double residual = 0.0;
    for (Eigen::Index k = 0; k < span.cols(); ++k) {
        Eigen::VectorXcd image =
            apply_conjugation(spec, basis, span.col(k));
        for (Eigen::Index i = 0; i < dim; ++i) image(i) *= root_weights(i);
        const Eigen::VectorXcd projected =
            weighted * decomposition.solve(image);
        residual = std::max(residual,
                            (projected - image).norm() / image.norm());
    }
    return residual;
}

}  // namespace

SymmetryReport classify_states(const SpectralReport& report,
                               const MonomialBasis& basis,
                               const std::vector<ConjugationSpec>& specs,
                               const std::vector<ReferenceState>& representatives) {
    SymmetryReport out;
    out.params = report.params;
    out.degree = report.degree;

    const OperatorMatrix op{basis, report.matrix};
    out.prop1_residual =
        (fock_adjoint(op).entries - op.entries).cwiseAbs().maxCoeff();
    const auto c3 = ConjugationSpec::global();
    out.prop2_residual =
        (conjugated_operator(c3, basis, fock_adjoint(op).entries) - op.entries)
            .cwiseAbs()
            .maxCoeff();

    for (const auto& spec : specs) {
        SpecClassification result;
        result.spec = spec;
        result.operator_residual = operator_symmetry_residual(spec, op);
        result.is_symmetry = result.operator_residual < kSymmetryTolerance;

        if (!representatives.empty()) {
            for (const auto& rep : representatives)
                result.states.push_back(classify_one(spec, basis, rep.id,
                                                     rep.coefficients,
                                                     result.is_symmetry));
        } else {
            for (std::size_t cl = 0; cl < report.degeneracies.size(); ++cl) {
                const auto& cluster = report.degeneracies[cl];
                for (int member : cluster.members) {
                    auto state = classify_one(
                        spec, basis, "state_" + std::to_string(member),
                        report.right_eigenvectors.col(member),
                        result.is_symmetry);
                    state.cluster = static_cast<int>(cl);
                    result.states.push_back(state);
                }
                if (cluster.multiplicity >= 2) {
                    Eigen::MatrixXcd span(basis.size(), cluster.multiplicity);
                    for (int k = 0; k < cluster.multiplicity; ++k)
                        span.col(k) = report.right_eigenvectors.col(
                            cluster.members[k]);
                    ClusterVerdict verdict;
                    verdict.cluster = static_cast<int>(cl);
                    verdict.multiplicity = cluster.multiplicity;
                    verdict.value = cluster.value;
                    verdict.invariance_residual =
                        span_invariance_residual(spec, basis, span);
                    verdict.invariant =
                        verdict.invariance_residual < kSymmetryTolerance;
                    result.clusters.push_back(verdict);
                }
            }
            // deterministic state order: by eigenvalue slot
            std::sort(result.states.begin(), result.states.end(),
                      [](const StateClassification& a,
                         const StateClassification& b) {
                          return a.id < b.id;
                      });
        }
        out.specs.push_back(std::move(result));
    }
    return out;
}

PairingCheck biorthogonality_check(const SpectralReport& report,
                                   const MonomialBasis& basis) {
    PairingCheck check;
    const Eigen::Index dim = report.eigenvalues.size();
    check.pairing.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            check.pairing(i, j) =
                fock_dot(basis, report.left_eigenvectors.col(i),
                         report.right_eigenvectors.col(j));

    std::vector<int> cluster_of(dim, -1);
    for (std::size_t cl = 0; cl < report.degeneracies.size(); ++cl)
        for (int member : report.degeneracies[cl].members)
            cluster_of[member] = static_cast<int>(cl);

    double residual = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (cluster_of[i] == cluster_of[j]) continue;  // cluster-level only
            const double denom = std::sqrt(std::abs(check.pairing(i, i)) *
                                           std::abs(check.pairing(j, j)));
            if (denom > 0.0)
                residual =
                    std::max(residual, std::abs(check.pairing(i, j)) / denom);
        }
    }
    check.offdiag_residual = residual;

    for (const auto& cluster : report.degeneracies) {
        if (cluster.multiplicity < 2) continue;
        check.cluster_notes.push_back(
            "eigenvalue " + std::to_string(cluster.value) + " multiplicity " +
            std::to_string(cluster.multiplicity) +
            ": cluster-level pairing only");
    }
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (std::abs(check.pairing(i, i)) < 1e-10)
            check.cluster_notes.push_back(
                "state " + std::to_string(i) +
                ": near-defective left/right pairing");
    }
    return check;
}

}  // namespace higgs
