#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "higgs/paper_tables.hpp"
#include "higgs/report.hpp"

namespace higgs {

/// Exit-code contract: 0 = all assertions pass, 1 = numerical assertion
/// breach, 2 = usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    double gamma = 0.6;
    double c = 3.0;
    double beta = 1.0;
    double p = 1.0;
    int degree = 2;
    std::vector<std::string> specs{"1", "2", "3", "13", "23", "12", "123"};
    std::string format = "json";  ///< json|csv
    bool check_paper = false;
    double c_min = -1.0;
    double c_max = 4.0;
    double c_step = 0.25;
    double tol_residual = 1e-10;
    double tol_imag = 1e-9;
    bool parallel = true;

    void validate() const;  ///< throws InvalidParams on a bad configuration
    DeformationParams params() const;
    Exec exec() const { return parallel ? Exec::parallel : Exec::serial; }
};

/// Bundle of every algebraic identity check, for the verify-algebra command.
struct AlgebraVerification {
    DeformationParams params;
    std::vector<IdentityCheck> frame_checks;
    std::vector<IdentityCheck> js_checks;
    std::vector<IdentityCheck> dm_checks;
    std::vector<IdentityCheck> higgs_checks;
    DysonMaleevSignRecord dm_sign;
    Eq4Report eq4;
    H1TableDiff table_diff;
    std::vector<Discrepancy> discrepancies;
    double worst_hard_residual = 0.0;
    std::string first_failure;  ///< empty when every hard identity holds
    bool pass = false;
};

AlgebraVerification verify_algebra(const DeformationParams& params,
                                   double tolerance = 1e-10);
Json to_json(const AlgebraVerification& verification);

int run_verify_algebra(const RunConfig& config, std::ostream& out,
                       std::ostream& err);
int run_spectrum(const RunConfig& config, std::ostream& out,
                 std::ostream& err);
int run_classify_pt(const RunConfig& config, std::ostream& out,
                    std::ostream& err);
int run_scan(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace higgs
