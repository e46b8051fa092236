#include "higgs/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "higgs/zoo.hpp"

namespace higgs {

namespace {

double falling(std::uint32_t n, std::uint32_t k) {
    double f = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) f *= static_cast<double>(n - i);
    return f;
}

double factorial(std::uint32_t n) {
    double f = 1.0;
    for (std::uint32_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

}  // namespace

BlockViolation::BlockViolation(int row_, int col_, double value_)
    : std::runtime_error("cross-block entry (" + std::to_string(row_) + "," +
                         std::to_string(col_) + ") = " +
                         std::to_string(value_) + " exceeds tolerance"),
      row(row_),
      col(col_),
      value(value_) {}

MonomialBasis MonomialBasis::make(int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    MonomialBasis basis;
    basis.degree_ = degree;
    for (int n3 = degree; n3 >= 0; --n3) {
        BlockRef block{n3, static_cast<int>(basis.elements_.size()),
                       degree - n3 + 1};
        for (int n1 = degree - n3; n1 >= 0; --n1) {
            const int n2 = degree - n3 - n1;
            Monomial m{{static_cast<std::uint32_t>(n1),
                        static_cast<std::uint32_t>(n2),
                        static_cast<std::uint32_t>(n3)}};
            basis.index_.emplace(m, static_cast<int>(basis.elements_.size()));
            basis.elements_.push_back(m);
        }
        basis.blocks_.push_back(block);
    }
    return basis;
}

int MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

double MonomialBasis::gram_weight(std::size_t i) const {
    const auto& e = elements_[i].exponents;
    return factorial(e[0]) * factorial(e[1]) * factorial(e[2]);
}

OperatorMatrix to_matrix(const BosonPolynomial& op, const MonomialBasis& basis,
                         Exec exec) {
    if (op.n_modes() != 3)
        throw std::invalid_argument("Bargmann realization expects 3 modes");
    if (!op.conserves_total_number())
        throw NonInvariantOperator(
            "operator changes total degree; the homogeneous space is not "
            "invariant");

    const auto dim = static_cast<Eigen::Index>(basis.size());
    OperatorMatrix result{basis, Eigen::MatrixXcd::Zero(dim, dim)};

    parallel_for(exec, dim, [&](std::size_t col) {
        const auto& source = basis.at(col).exponents;
        for (const auto& [key, coeff] : op.terms()) {
            double amp = 1.0;
            Monomial target;
            bool ok = true;
            for (int j = 0; j < 3 && ok; ++j) {
                const std::uint32_t q = key.annihilation[j];
                if (source[j] < q) {
                    ok = false;
                    break;
                }
                amp *= falling(source[j], q);
                target.exponents[j] = source[j] - q + key.creation[j];
            }
            if (!ok || amp == 0.0) continue;
            const int row = basis.index_of(target);
            // degree preservation guarantees membership
            result.entries(row, static_cast<Eigen::Index>(col)) += coeff * amp;
        }
    });
    return result;
}

ActionCoefficients action_coefficients(const Monomial& m,
                                       const DeformationParams& params) {
    params.validate();
    const double n1 = m.exponents[0];
    const double n2 = m.exponents[1];
    const double n3 = m.exponents[2];
    const double g = params.gamma;
    const double w0 = params.omega0;
    const double shift = w0 * (params.c - n3);
    const Complex ig2{0.0, g / 2.0};

    ActionCoefficients a;
    const double d = 0.5 * (n1 - n2) + shift;
    a.diagonal = Complex{d * d - g * g / 4.0 * (n1 + n2 + 2.0 * n1 * n2), 0.0};
    a.up2 = Complex{-g * g / 4.0, 0.0};
    a.down2 = a.up2;
    a.up1 = ig2 * (n2 * (n1 - n2 + 1.0 + 2.0 * shift));
    a.down1 = ig2 * (n1 * (n1 - n2 - 1.0 + 2.0 * shift));
    return a;
}

OperatorMatrix assemble_action_matrix(const MonomialBasis& basis,
                                      const DeformationParams& params,
                                      Exec exec) {
    const auto dim = static_cast<Eigen::Index>(basis.size());
    OperatorMatrix result{basis, Eigen::MatrixXcd::Zero(dim, dim)};
    const double scale = 1.0 / (params.omega0 * params.omega0);

    parallel_for(exec, dim, [&](std::size_t col) {
        const Monomial& m = basis.at(col);
        const auto a = action_coefficients(m, params);
        const auto n1 = m.exponents[0];
        const auto n2 = m.exponents[1];
        const auto n3 = m.exponents[2];

        auto put = [&](int d1, int d2, Complex value) {
            if (value == Complex{0.0, 0.0}) return;
            const int t1 = static_cast<int>(n1) + d1;
            const int t2 = static_cast<int>(n2) + d2;
            if (t1 < 0 || t2 < 0) return;
            Monomial target{{static_cast<std::uint32_t>(t1),
                             static_cast<std::uint32_t>(t2), n3}};
            const int row = basis.index_of(target);
            if (row >= 0)
                result.entries(row, static_cast<Eigen::Index>(col)) +=
                    scale * value;
        };

        put(0, 0, a.diagonal);
        // printed +-2 coefficients are operator coefficients; the matrix
        // elements carry the transfer occupancies
        put(+2, -2, a.up2 * falling(n2, 2));
        put(-2, +2, a.down2 * falling(n1, 2));
        put(+1, -1, a.up1);
        put(-1, +1, a.down1);
    });
    return result;
}

std::vector<Block> block_decompose(const OperatorMatrix& mat,
                                   double tolerance) {
    const auto& basis = mat.basis;
    std::vector<Block> blocks;
    for (const auto& ref : basis.blocks())
        blocks.push_back(
            {ref.n3, ref.offset,
             mat.entries.block(ref.offset, ref.offset, ref.size, ref.size)});

    const auto dim = static_cast<Eigen::Index>(basis.size());
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (basis.at(r).exponents[2] == basis.at(c).exponents[2]) continue;
            const double v = std::abs(mat.entries(r, c));
            if (v > tolerance)
                throw BlockViolation(static_cast<int>(r), static_cast<int>(c),
                                     v);
        }
    }
    return blocks;
}

namespace {

struct BlockEigen {
    Eigen::VectorXcd values;
    Eigen::MatrixXcd right;
    Eigen::MatrixXcd left;  // euclidean left eigenvectors of the block
};

BlockEigen solve_block(const Eigen::MatrixXcd& block) {
    BlockEigen out;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> right_solver(block);
    if (right_solver.info() != Eigen::Success)
        throw std::runtime_error("eigen-solver failed on a diagonal block");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> left_solver(block.adjoint());
    if (left_solver.info() != Eigen::Success)
        throw std::runtime_error("eigen-solver failed on an adjoint block");

    const auto dim = block.rows();
    // sort right eigenpairs by (re, im) for deterministic reports
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    const auto& vals = right_solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (vals(a).real() != vals(b).real())
            return vals(a).real() < vals(b).real();
        return vals(a).imag() < vals(b).imag();
    });

    out.values.resize(dim);
    out.right.resize(dim, dim);
    out.left.resize(dim, dim);
    std::vector<bool> used(dim, false);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const int src = order[i];
        out.values(i) = vals(src);
        out.right.col(i) = right_solver.eigenvectors().col(src);
        // match the adjoint eigenvector with eigenvalue closest to conj(lambda)
        int best = -1;
        double best_dist = 0.0;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (used[j]) continue;
            const double dist = std::abs(left_solver.eigenvalues()(j) -
                                         std::conj(vals(src)));
            if (best < 0 || dist < best_dist) {
                best = static_cast<int>(j);
                best_dist = dist;
            }
        }
        used[best] = true;
        out.left.col(i) = left_solver.eigenvectors().col(best);
    }
    return out;
}

std::vector<EigenvalueCluster> cluster_eigenvalues(
    const Eigen::VectorXcd& values, double rtol) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return values(a).real() < values(b).real();
    });

    std::vector<EigenvalueCluster> clusters;
    for (int idx : order) {
        const double v = values(idx).real();
        if (!clusters.empty()) {
            auto& last = clusters.back();
            const double tol = rtol * std::max(1.0, std::abs(last.value));
            if (std::abs(v - last.value) <= tol) {
                last.members.push_back(idx);
                last.multiplicity += 1;
                // running mean keeps the representative stable
                last.value += (v - last.value) / last.multiplicity;
                continue;
            }
        }
        clusters.push_back({v, 1, {idx}});
    }
    return clusters;
}

}  // namespace

SpectralReport spectrum(const OperatorMatrix& mat,
                        const DeformationParams& params, Exec exec) {
    SpectralReport report;
    report.params = params;
    report.degree = mat.basis.degree();
    report.matrix = mat.entries;

    const auto blocks = block_decompose(mat);
    const auto dim = static_cast<Eigen::Index>(mat.basis.size());
    report.eigenvalues.setZero(dim);
    report.right_eigenvectors.setZero(dim, dim);
    report.left_eigenvectors.setZero(dim, dim);
    report.block_of_state.assign(dim, 0);

    std::vector<BlockEigen> solved(blocks.size());
    parallel_for(exec, static_cast<std::ptrdiff_t>(blocks.size()),
                 [&](std::size_t b) { solved[b] = solve_block(blocks[b].entries); });

    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& block = blocks[b];
        const auto size = block.entries.rows();
        report.block_sizes.push_back(static_cast<int>(size));
        for (Eigen::Index i = 0; i < size; ++i) {
            const auto slot = block.offset + i;
            report.eigenvalues(slot) = solved[b].values(i);
            report.block_of_state[slot] = static_cast<int>(b);
            report.right_eigenvectors.col(slot).segment(block.offset, size) =
                solved[b].right.col(i);
            // Fock-adjoint eigenvector: G^-1 times the euclidean left vector
            for (Eigen::Index r = 0; r < size; ++r)
                report.left_eigenvectors(block.offset + r, slot) =
                    solved[b].left(r, i) /
                    mat.basis.gram_weight(block.offset + r);
        }
    }

    report.max_imag = report.eigenvalues.imag().cwiseAbs().maxCoeff();
    report.degeneracies =
        cluster_eigenvalues(report.eigenvalues, SpectralReport::cluster_rtol);

    // Fock pairing <left_i, right_j>_F = (euclidean left)^H right; off-diagonal
    // residual over pairs of simple eigenvalues.
    Eigen::MatrixXcd weighted_left = report.left_eigenvectors;
    for (Eigen::Index r = 0; r < dim; ++r)
        weighted_left.row(r) *= mat.basis.gram_weight(r);
    const Eigen::MatrixXcd pairing =
        weighted_left.adjoint() * report.right_eigenvectors;
    std::vector<bool> simple(dim, false);
    for (const auto& cluster : report.degeneracies)
        if (cluster.multiplicity == 1) simple[cluster.members[0]] = true;
    double residual = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (!simple[i]) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (i == j || !simple[j]) continue;
            const double denom = std::sqrt(std::abs(pairing(i, i)) *
                                           std::abs(pairing(j, j)));
            if (denom > 0.0)
                residual = std::max(residual, std::abs(pairing(i, j)) / denom);
        }
    }
    report.biorthogonality_residual = residual;
    return report;
}

ScanReport degeneracy_scan(int degree, double gamma,
                           const std::vector<double>& c_values, Exec exec) {
    ScanReport report;
    report.degree = degree;
    report.gamma = gamma;
    report.c_values = c_values;

    const auto basis = MonomialBasis::make(degree);
    std::vector<std::vector<EigenvalueCluster>> grid(c_values.size());
    parallel_for(exec, static_cast<std::ptrdiff_t>(c_values.size()),
                 [&](std::size_t i) {
                     const auto params =
                         DeformationParams::make(gamma, c_values[i]);
                     const auto mat =
                         to_matrix(build_h1_algebraic(params), basis);
                     const auto spec = spectrum(mat, params);
                     grid[i] = spec.degeneracies;
                 });

    // Multiplicity profile per grid point. The generic profile is the least
    // degenerate one observed (largest cluster count; most frequent among
    // ties) -- special points can outnumber generic ones on coarse grids.
    auto profile = [](const std::vector<EigenvalueCluster>& clusters) {
        std::vector<int> mults;
        for (const auto& c : clusters) mults.push_back(c.multiplicity);
        std::sort(mults.begin(), mults.end());
        return mults;
    };
    std::map<std::vector<int>, int> votes;
    for (const auto& clusters : grid) votes[profile(clusters)] += 1;
    std::vector<int> generic;
    int best_count = -1;
    for (const auto& [prof, count] : votes) {
        const bool less_degenerate =
            generic.empty() || prof.size() > generic.size() ||
            (prof.size() == generic.size() && count > best_count);
        if (less_degenerate) {
            best_count = count;
            generic = prof;
        }
    }

    for (std::size_t i = 0; i < c_values.size(); ++i) {
        const bool jump = profile(grid[i]) != generic;
        if (jump) report.jump_points.push_back(c_values[i]);
        for (const auto& cluster : grid[i])
            if (cluster.multiplicity >= 2)
                report.rows.push_back(
                    {c_values[i], cluster.value, cluster.multiplicity, jump});
    }
    return report;
}

}  // namespace higgs
