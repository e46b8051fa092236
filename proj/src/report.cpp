#include "higgs/report.hpp"

#include <cstdio>
#include <sstream>

namespace higgs {

namespace {

Json complex_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Json to_json(const DeformationParams& params) {
    Json j;
    j["gamma"] = params.gamma;
    j["omega0"] = params.omega0;
    j["theta"] = params.theta;
    j["phi"] = params.phi;
    j["p"] = params.p;
    j["c"] = params.c;
    j["beta"] = params.beta;
    j["s"] = complex_json(params.s);
    return j;
}

Json to_json(const IdentityCheck& check) {
    return Json{{"name", check.name}, {"residual", check.residual}};
}

Json to_json(const Discrepancy& discrepancy) {
    Json j;
    j["location"] = discrepancy.location;
    j["printed"] = discrepancy.printed;
    j["computed"] = discrepancy.computed;
    if (!discrepancy.note.empty()) j["note"] = discrepancy.note;
    return j;
}

Json to_json(const SpectralReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["params"] = to_json(report.params);
    j["degree"] = report.degree;
    j["block_sizes"] = report.block_sizes;
    Json values = Json::array();
    for (Eigen::Index i = 0; i < report.eigenvalues.size(); ++i)
        values.push_back(complex_json(report.eigenvalues(i)));
    j["eigenvalues"] = values;
    j["max_imag"] = report.max_imag;
    Json clusters = Json::array();
    for (const auto& cluster : report.degeneracies)
        clusters.push_back(Json{{"value", cluster.value},
                                {"multiplicity", cluster.multiplicity}});
    j["degeneracies"] = clusters;
    j["residuals"] =
        Json{{"biorthogonality", report.biorthogonality_residual}};
    return j;
}

Json to_json(const SymmetryReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["params"] = to_json(report.params);
    j["degree"] = report.degree;
    j["adjoint_residuals"] = Json{{"h_star_minus_h", report.prop1_residual},
                                  {"c3_self_adjoint", report.prop2_residual}};
    Json specs = Json::array();
    for (const auto& spec : report.specs) {
        Json entry;
        entry["spec"] = spec.spec.name();
        entry["operator_residual"] = spec.operator_residual;
        entry["is_symmetry"] = spec.is_symmetry;
        Json states = Json::array();
        for (const auto& state : spec.states) {
            Json s;
            s["id"] = state.id;
            s["verdict"] = to_string(state.verdict);
            s["strict"] = state.strict;
            s["projective"] = state.projective;
            s["lambda"] = complex_json(state.lambda);
            s["residual_strict"] = state.residual_strict;
            s["residual_projective"] = state.residual_projective;
            if (state.adopting) s["adopting"] = true;
            if (state.cluster >= 0) s["cluster"] = state.cluster;
            states.push_back(s);
        }
        entry["states"] = states;
        if (!spec.clusters.empty()) {
            Json clusters = Json::array();
            for (const auto& cluster : spec.clusters)
                clusters.push_back(
                    Json{{"cluster", cluster.cluster},
                         {"multiplicity", cluster.multiplicity},
                         {"value", cluster.value},
                         {"invariance_residual", cluster.invariance_residual},
                         {"invariant", cluster.invariant}});
            entry["cluster_verdicts"] = clusters;
        }
        specs.push_back(entry);
    }
    j["specs"] = specs;
    return j;
}

Json to_json(const ScanReport& report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["degree"] = report.degree;
    j["gamma"] = report.gamma;
    j["c_values"] = report.c_values;
    Json rows = Json::array();
    for (const auto& row : report.rows)
        rows.push_back(Json{{"c", row.c},
                            {"eigenvalue", row.eigenvalue},
                            {"multiplicity", row.multiplicity},
                            {"at_jump_point", row.at_jump_point}});
    j["rows"] = rows;
    j["jump_points"] = report.jump_points;
    return j;
}

std::string eigenvalues_to_csv(const SpectralReport& report) {
    std::ostringstream os;
    os << "index,block,re,im\n";
    for (Eigen::Index i = 0; i < report.eigenvalues.size(); ++i)
        os << i << "," << report.block_of_state[i] << ","
           << csv_double(report.eigenvalues(i).real()) << ","
           << csv_double(report.eigenvalues(i).imag()) << "\n";
    return os.str();
}

std::string scan_to_csv(const ScanReport& report) {
    std::ostringstream os;
    os << "c,eigenvalue,multiplicity,at_jump_point\n";
    for (const auto& row : report.rows)
        os << csv_double(row.c) << "," << csv_double(row.eigenvalue) << ","
           << row.multiplicity << "," << (row.at_jump_point ? 1 : 0) << "\n";
    return os.str();
}

}  // namespace higgs
