#pragma once

#include <string>

#include <json.hpp>

#include "qdm/density_matrix.hpp"

namespace qdm {

inline constexpr int kStateSchemaVersion = 1;

// JSON state file: schema_version, n_qubits, row-major {re, im} entries,
// free-form metadata. Round-trips are bitwise lossless.
nlohmann::json state_to_json(const DensityMatrix& rho,
                             const nlohmann::json& metadata = nlohmann::json::object());

// Throws std::domain_error naming the violated invariant or schema field.
DensityMatrix state_from_json(const nlohmann::json& j);

void save_state(const std::string& path, const DensityMatrix& rho,
                const nlohmann::json& metadata = nlohmann::json::object());
DensityMatrix load_state(const std::string& path);

}  // namespace qdm
