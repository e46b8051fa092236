#include "higgs/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace higgs {

DeformationParams DeformationParams::make(double gamma, double c, double p,
                                          double beta) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw InvalidParams("gamma must lie in [0,1), got " +
                            std::to_string(gamma));
    DeformationParams params;
    params.gamma = gamma;
    params.theta = std::asin(gamma);
    params.phi = std::numbers::pi;
    params.omega0 = std::sqrt(1.0 - gamma * gamma);
    params.p = p;
    params.c = c;
    params.beta = beta;
    params.s = std::sqrt(std::complex<double>(-beta, 0.0));
    params.validate();
    return params;
}

void DeformationParams::validate() const {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw InvalidParams("gamma outside [0,1)");
    if (std::abs(gamma * gamma + omega0 * omega0 - 1.0) > 1e-12)
        throw InvalidParams("gamma^2 + omega0^2 != 1");
    if (std::abs(omega0) < 1e-12)
        throw InvalidParams("omega0 must be nonzero (theta = pi/2 excluded)");
    if (std::abs(s * s + std::complex<double>(beta, 0.0)) > 1e-12)
        throw InvalidParams("s^2 + beta != 0");
}

}  // namespace higgs
