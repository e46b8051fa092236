#pragma once

// Test-only oracle: realize boson polynomials as matrices on a truncated
// Fock space (sqrt-normalized ladder action) independently of the
// normal-ordering engine, so products can be checked as matrix products.

#include <Eigen/Dense>

#include <vector>

#include "higgs/boson.hpp"

namespace higgs::testing {

class TruncatedFock {
  public:
    TruncatedFock(int n_modes, int max_occupation)
        : n_modes_(n_modes), cap_(max_occupation) {
        std::vector<std::uint32_t> occ(n_modes, 0);
        enumerate(occ, 0);
    }

    int dimension() const { return static_cast<int>(states_.size()); }
    const std::vector<MultiIndex>& states() const { return states_; }

    int index_of(const MultiIndex& state) const {
        for (std::size_t i = 0; i < states_.size(); ++i)
            if (states_[i] == state) return static_cast<int>(i);
        return -1;
    }

    Eigen::MatrixXcd matrix(const BosonPolynomial& poly) const {
        Eigen::MatrixXcd mat =
            Eigen::MatrixXcd::Zero(dimension(), dimension());
        for (const auto& [key, coeff] : poly.terms()) {
            for (int col = 0; col < dimension(); ++col) {
                MultiIndex state = states_[col];
                double amp = 1.0;
                bool ok = true;
                for (int j = 0; j < n_modes_ && ok; ++j) {
                    for (std::uint32_t q = 0; q < key.annihilation[j]; ++q) {
                        if (state[j] == 0) { ok = false; break; }
                        amp *= std::sqrt(static_cast<double>(state[j]));
                        --state[j];
                    }
                }
                for (int j = 0; j < n_modes_ && ok; ++j) {
                    for (std::uint32_t p = 0; p < key.creation[j]; ++p) {
                        if (state[j] + 1 > static_cast<std::uint32_t>(cap_)) {
                            ok = false;  // leaves the truncated space
                            break;
                        }
                        ++state[j];
                        amp *= std::sqrt(static_cast<double>(state[j]));
                    }
                }
                if (!ok || amp == 0.0) continue;
                const int row = index_of(state);
                if (row >= 0) mat(row, col) += coeff * amp;
            }
        }
        return mat;
    }

    /// True when column `col` has enough headroom that applying operators of
    /// combined degree `degree` cannot hit the truncation boundary.
    bool has_headroom(int col, std::uint32_t degree) const {
        for (auto occ : states_[col])
            if (occ + degree > static_cast<std::uint32_t>(cap_)) return false;
        return true;
    }

  private:
    void enumerate(std::vector<std::uint32_t>& occ, int mode) {
        if (mode == n_modes_) {
            states_.push_back(occ);
            return;
        }
        for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(cap_); ++k) {
            occ[mode] = k;
            enumerate(occ, mode + 1);
        }
        occ[mode] = 0;
    }

    int n_modes_;
    int cap_;
    std::vector<MultiIndex> states_;
};

}  // namespace higgs::testing
