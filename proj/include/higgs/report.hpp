#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "higgs/bargmann.hpp"
#include "higgs/paper_tables.hpp"
#include "higgs/ptsym.hpp"
#include "higgs/zoo.hpp"

namespace higgs {

/// All emitted documents use insertion-ordered keys so identical inputs
/// produce byte-identical output.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const DeformationParams& params);
Json to_json(const IdentityCheck& check);
Json to_json(const Discrepancy& discrepancy);
Json to_json(const SpectralReport& report);
Json to_json(const SymmetryReport& report);
Json to_json(const ScanReport& report);

std::string eigenvalues_to_csv(const SpectralReport& report);
std::string scan_to_csv(const ScanReport& report);

}  // namespace higgs
