#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "higgs/boson.hpp"
#include "higgs/parallel.hpp"
#include "higgs/params.hpp"

namespace higgs {

struct NonInvariantOperator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BlockViolation : std::runtime_error {
    BlockViolation(int row, int col, double value);
    int row;
    int col;
    double value;
};

/// zeta_1^{n1} zeta_2^{n2} zeta_3^{n3}  <->  |n1, n2, n3>
struct Monomial {
    std::array<std::uint32_t, 3> exponents{0, 0, 0};

    std::uint32_t degree() const {
        return exponents[0] + exponents[1] + exponents[2];
    }
    auto operator<=>(const Monomial&) const = default;
};

/// Ordered degree-n basis in three indeterminates. Canonical block order:
/// descending n3 (so each fixed-n3 block is contiguous, sizes 1..n+1),
/// then descending n1 within a block.
class MonomialBasis {
  public:
    static MonomialBasis make(int degree);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Monomial>& elements() const { return elements_; }
    const Monomial& at(std::size_t i) const { return elements_[i]; }

    /// -1 when the monomial is not a member.
    int index_of(const Monomial& m) const;

    struct BlockRef {
        int n3;
        int offset;
        int size;
    };
    const std::vector<BlockRef>& blocks() const { return blocks_; }

    /// Fock-space squared norm of element i: n1! n2! n3!.
    double gram_weight(std::size_t i) const;

  private:
    int degree_ = 0;
    std::vector<Monomial> elements_;
    std::vector<BlockRef> blocks_;
    std::map<Monomial, int> index_;
};

struct OperatorMatrix {
    MonomialBasis basis;
    Eigen::MatrixXcd entries;
};

/// Matrix of a number-conserving polynomial on the degree-n space under
/// a_j† -> multiplication by zeta_j, a_j -> d/d zeta_j.
OperatorMatrix to_matrix(const BosonPolynomial& op, const MonomialBasis& basis,
                         Exec exec = Exec::serial);

/// The five closed-form action coefficients of the Hamiltonian on
/// |n1,n2,n3>, still to be scaled by omega0^-2. The +-2 transfer entries
/// are the printed operator coefficients; as matrix elements they carry
/// the ladder occupancy factors n2(n2-1) resp. n1(n1-1) (see
/// assemble_action_matrix).
struct ActionCoefficients {
    Complex diagonal;   ///< A(0,0,0)
    Complex up2;        ///< A(2,-2,0)
    Complex down2;      ///< A(-2,2,0)
    Complex up1;        ///< A(1,-1,0)
    Complex down1;      ///< A(-1,1,0)
};

ActionCoefficients action_coefficients(const Monomial& m,
                                       const DeformationParams& params);

/// Hamiltonian matrix assembled from the closed-form coefficients; the
/// independent oracle for to_matrix(build_h1_algebraic).
OperatorMatrix assemble_action_matrix(const MonomialBasis& basis,
                                      const DeformationParams& params,
                                      Exec exec = Exec::serial);

struct Block {
    int n3;
    int offset;
    Eigen::MatrixXcd entries;
};

/// Splits a canonical-order matrix into its fixed-n3 diagonal blocks;
/// throws BlockViolation when any cross-block entry exceeds 1e-13.
std::vector<Block> block_decompose(const OperatorMatrix& mat,
                                   double tolerance = 1e-13);

struct EigenvalueCluster {
    double value = 0.0;  ///< representative (mean of member real parts)
    int multiplicity = 0;
    std::vector<int> members;  ///< indices into the eigenvalue list
};

struct SpectralReport {
    DeformationParams params;
    int degree = 0;
    std::vector<int> block_sizes;
    std::vector<int> block_of_state;  ///< block index per eigenvalue slot
    Eigen::VectorXcd eigenvalues;
    /// Columns are right eigenvectors in basis coordinates.
    Eigen::MatrixXcd right_eigenvectors;
    /// Columns are eigenvectors of the Fock adjoint ("bra" states); their
    /// Fock inner products with the right eigenvectors form the pairing.
    Eigen::MatrixXcd left_eigenvectors;
    double max_imag = 0.0;
    std::vector<EigenvalueCluster> degeneracies;  ///< clusters, mult >= 1
    double biorthogonality_residual = 0.0;
    Eigen::MatrixXcd matrix;  ///< the operator the report was built from

    static constexpr double cluster_rtol = 1e-8;
};

SpectralReport spectrum(const OperatorMatrix& mat,
                        const DeformationParams& params,
                        Exec exec = Exec::serial);

struct ScanRow {
    double c = 0.0;
    double eigenvalue = 0.0;
    int multiplicity = 0;
    bool at_jump_point = false;
};

struct ScanReport {
    int degree = 0;
    double gamma = 0.0;
    std::vector<double> c_values;
    std::vector<ScanRow> rows;          ///< clusters with multiplicity >= 2
    std::vector<double> jump_points;    ///< c where the multiplicity profile
                                        ///< departs from the generic one
};

/// Degeneracy scan of the Hamiltonian spectrum over a grid of c values at
/// fixed gamma. Grid points are independent; Exec::parallel fans them out.
ScanReport degeneracy_scan(int degree, double gamma,
                           const std::vector<double>& c_values,
                           Exec exec = Exec::serial);

}  // namespace higgs
