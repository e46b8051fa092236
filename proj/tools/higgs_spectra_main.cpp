#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "higgs/cli.hpp"

namespace {

struct CommonOptions {
    higgs::RunConfig config;
    std::string out_path;
    std::string specs_csv;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--gamma", opts.config.gamma,
                    "deformation parameter in [0,1)");
    cmd->add_option("--c", opts.config.c, "Dyson-Maleev parameter");
    cmd->add_option("--beta", opts.config.beta, "cubic-term coefficient");
    cmd->add_option("--p", opts.config.p, "ladder exponent");
    cmd->add_option("--n", opts.config.degree, "degree of homogeneity");
    cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    cmd->add_option("--format", opts.config.format, "json|csv");
    cmd->add_flag("--check-paper", opts.config.check_paper,
                  "compare against the built-in tables");
    cmd->add_option("--tol-residual", opts.config.tol_residual,
                    "identity residual tolerance");
    cmd->add_option("--tol-imag", opts.config.tol_imag,
                    "eigenvalue imaginary-part tolerance");
    cmd->add_flag("!--serial", opts.config.parallel,
                  "disable the parallel kernels");
}

int dispatch(int (*runner)(const higgs::RunConfig&, std::ostream&,
                           std::ostream&),
             CommonOptions& opts) {
    if (!opts.specs_csv.empty()) {
        opts.config.specs.clear();
        std::stringstream stream(opts.specs_csv);
        std::string item;
        while (std::getline(stream, item, ','))
            if (!item.empty()) opts.config.specs.push_back(item);
    }
    if (opts.out_path.empty())
        return runner(opts.config, std::cout, std::cerr);
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output path " << opts.out_path << "\n";
        return higgs::kExitUsage;
    }
    return runner(opts.config, file, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Deformed three-boson operator algebra: construction, spectra, and "
        "partial PT classification"};
    app.require_subcommand(1);

    CommonOptions verify, spectrum, classify, scan;

    auto* cmd_verify = app.add_subcommand(
        "verify-algebra", "check every defining commutation relation");
    add_common(cmd_verify, verify);

    auto* cmd_spectrum = app.add_subcommand(
        "spectrum", "eigenvalues and block structure of the Hamiltonian");
    add_common(cmd_spectrum, spectrum);

    auto* cmd_classify = app.add_subcommand(
        "classify-pt", "partial PT classification of the eigenstates");
    add_common(cmd_classify, classify);
    cmd_classify->add_option("--specs", classify.specs_csv,
                             "comma-separated conjugations, e.g. 1,23,123");

    auto* cmd_scan = app.add_subcommand(
        "scan", "degeneracy scan over a grid of c values");
    add_common(cmd_scan, scan);
    cmd_scan->add_option("--c-min", scan.config.c_min, "grid start");
    cmd_scan->add_option("--c-max", scan.config.c_max, "grid end");
    cmd_scan->add_option("--c-step", scan.config.c_step, "grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? higgs::kExitOk : higgs::kExitUsage;
    }

    if (cmd_verify->parsed())
        return dispatch(higgs::run_verify_algebra, verify);
    if (cmd_spectrum->parsed())
        return dispatch(higgs::run_spectrum, spectrum);
    if (cmd_classify->parsed())
        return dispatch(higgs::run_classify_pt, classify);
    return dispatch(higgs::run_scan, scan);
}
