#pragma once

#include <complex>
#include <stdexcept>

namespace higgs {

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scalar parameter set of the deformation. Consistency invariants:
/// gamma = sin(theta), omega0 = cos(theta) (so gamma^2 + omega0^2 = 1),
/// omega0 != 0, phi = pi, and s^2 + beta = 0.
struct DeformationParams {
    double theta = 0.0;
    double phi = 0.0;
    double gamma = 0.0;
    double omega0 = 1.0;
    double p = 1.0;       ///< ladder-deformation exponent
    double c = 0.0;       ///< Dyson-Maleev parameter
    double beta = 1.0;
    std::complex<double> s{0.0, 1.0};

    /// Build from gamma in [0,1); derives theta, omega0, and s = sqrt(-beta).
    static DeformationParams make(double gamma, double c, double p = 1.0,
                                  double beta = 1.0);

    void validate() const;
};

}  // namespace higgs
