#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace higgs::testing {

/// || v/|v| - e^{i phi} w/|w| || minimized over the phase, i.e. how far the
/// two vectors are from being proportional.
inline double proportionality_residual(const Eigen::VectorXcd& v,
                                       const Eigen::VectorXcd& w) {
    const Eigen::VectorXcd a = v / v.norm();
    const Eigen::VectorXcd b = w / w.norm();
    const std::complex<double> overlap = b.dot(a);  // conj(b) . a
    if (std::abs(overlap) == 0.0) return std::sqrt(2.0);
    const std::complex<double> phase = overlap / std::abs(overlap);
    return (a - phase * b).norm();
}

/// Distance of v from the span of the columns of basis (euclidean).
inline double span_residual(const Eigen::VectorXcd& v,
                            const Eigen::MatrixXcd& basis) {
    const Eigen::VectorXcd coeffs =
        basis.completeOrthogonalDecomposition().solve(v);
    return (basis * coeffs - v).norm() / v.norm();
}

/// Spectrum of the derived closed-form law: block n3 carries spin
/// j = (n - n3)/2 and eigenvalues (c - n3 + m)^2 for m = -j..j.
inline std::vector<double> derived_eigenvalue_law(int n, double c) {
    std::vector<double> values;
    for (int n3 = n; n3 >= 0; --n3) {
        const int count = n - n3 + 1;  // 2j + 1
        const double j = 0.5 * (n - n3);
        for (int k = 0; k < count; ++k) {
            const double m = -j + k;
            const double v = c - n3 + m;
            values.push_back(v * v);
        }
    }
    return values;
}

inline bool matches_sorted(std::vector<double> a, std::vector<double> b,
                           double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace higgs::testing
