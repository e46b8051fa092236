#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "higgs/bargmann.hpp"

namespace higgs {

/// Antilinear conjugation flipping the sign of a subset S of modes plus
/// complex conjugation; S = {1,2,3} is the global operator.
struct ConjugationSpec {
    std::array<bool, 3> flipped{false, false, false};

    static ConjugationSpec from_modes(std::initializer_list<int> modes);
    /// "13" -> modes {1,3}; throws on anything but digits 1..3.
    static ConjugationSpec parse(const std::string& digits);
    static ConjugationSpec global() { return ConjugationSpec{{true, true, true}}; }

    bool empty() const { return !(flipped[0] || flipped[1] || flipped[2]); }
    std::string name() const;  ///< e.g. "C3(13)"

    /// (-1)^{sum of flipped-mode exponents}
    double parity(const Monomial& m) const;
};

/// c_alpha -> conj(c_alpha) * parity(alpha); antilinear and involutive.
Eigen::VectorXcd apply_conjugation(const ConjugationSpec& spec,
                                   const MonomialBasis& basis,
                                   const Eigen::VectorXcd& state);

/// C M C with (CMC)_ab = parity(a) parity(b) conj(M_ab).
Eigen::MatrixXcd conjugated_operator(const ConjugationSpec& spec,
                                     const MonomialBasis& basis,
                                     const Eigen::MatrixXcd& mat);

/// || C M C - M ||_max; zero exactly when the spec is a symmetry of M.
double operator_symmetry_residual(const ConjugationSpec& spec,
                                  const OperatorMatrix& mat);

/// Adjoint with respect to the Fock inner product in which monomials are
/// orthogonal with squared norm n1! n2! n3!: G^-1 M^H G with G = diag(a!).
OperatorMatrix fock_adjoint(const OperatorMatrix& mat);

double fock_norm(const MonomialBasis& basis, const Eigen::VectorXcd& v);
Complex fock_dot(const MonomialBasis& basis, const Eigen::VectorXcd& a,
                 const Eigen::VectorXcd& b);

enum class Verdict { symmetric_strict, symmetric_projective, breaking };

std::string to_string(Verdict v);

struct StateClassification {
    std::string id;
    Verdict verdict = Verdict::breaking;
    bool strict = false;
    bool projective = false;
    Complex lambda{0.0, 0.0};  ///< best unimodular factor
    double residual_strict = 0.0;
    double residual_projective = 0.0;
    bool adopting = false;  ///< strict-symmetric under a non-symmetry spec
    int cluster = -1;       ///< index into SpectralReport degeneracies, or -1
};

struct ClusterVerdict {
    int cluster = 0;
    int multiplicity = 0;
    double value = 0.0;
    double invariance_residual = 0.0;  ///< distance of C(span) from span
    bool invariant = false;
};

struct SpecClassification {
    ConjugationSpec spec;
    double operator_residual = 0.0;
    bool is_symmetry = false;
    std::vector<StateClassification> states;
    std::vector<ClusterVerdict> clusters;  ///< only multiplicity >= 2
};

struct SymmetryReport {
    DeformationParams params;
    int degree = 0;
    double prop1_residual = 0.0;  ///< || H* - H ||_max
    double prop2_residual = 0.0;  ///< || C3 H* C3 - H ||_max
    std::vector<SpecClassification> specs;
};

/// Named reference state, e.g. a printed eigenvector from the source tables.
struct ReferenceState {
    std::string id;
    Eigen::VectorXcd coefficients;
};

/// Classifies either the supplied representatives or, when none are given,
/// the computed eigenstates of the report (degenerate clusters judged by
/// C-invariance of their span).
SymmetryReport classify_states(const SpectralReport& report,
                               const MonomialBasis& basis,
                               const std::vector<ConjugationSpec>& specs,
                               const std::vector<ReferenceState>& representatives = {});

struct PairingCheck {
    Eigen::MatrixXcd pairing;  ///< Fock inner products <left_i, right_j>
    double offdiag_residual = 0.0;
    std::vector<std::string> cluster_notes;
};

PairingCheck biorthogonality_check(const SpectralReport& report,
                                   const MonomialBasis& basis);

inline constexpr double kSymmetryTolerance = 1e-8;

}  // namespace higgs
