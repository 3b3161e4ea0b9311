#include "qdm/state_io.hpp"

#include <fstream>

namespace qdm {

using nlohmann::json;

json state_to_json(const DensityMatrix& rho, const json& metadata) {
    json entries = json::array();
    const Mat& m = rho.mat();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            entries.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    return json{{"schema_version", kStateSchemaVersion},
                {"n_qubits", rho.n_qubits()},
                {"entries", std::move(entries)},
                {"metadata", metadata}};
}

DensityMatrix state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("schema_version") ||
        !j["schema_version"].is_number_integer())
        throw std::domain_error("state file: missing schema_version");
    if (j["schema_version"].get<int>() != kStateSchemaVersion)
        throw std::domain_error("state file: unsupported schema_version");
    if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer())
        throw std::domain_error("state file: missing n_qubits");
    const int n = j["n_qubits"].get<int>();
    if (n < 1) throw std::domain_error("state file: n_qubits must be positive");
    const Eigen::Index d = dim_for(n);
    if (!j.contains("entries") || !j["entries"].is_array() ||
        j["entries"].size() != static_cast<std::size_t>(d * d))
        throw std::domain_error("state file: entry count must be 4^n");
    Mat m(d, d);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index jc = 0; jc < d; ++jc) {
            const json& e = j["entries"][k++];
            if (!e.is_object() || !e.contains("re") || !e.contains("im"))
                throw std::domain_error("state file: entries must be {re, im}");
            m(i, jc) = cplx(e["re"].get<double>(), e["im"].get<double>());
        }
    try {
        return DensityMatrix(n, std::move(m));
    } catch (const std::invalid_argument& ex) {
        throw std::domain_error(ex.what());
    }
}

void save_state(const std::string& path, const DensityMatrix& rho,
                const json& metadata) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << state_to_json(rho, metadata).dump(2) << "\n";
}

DensityMatrix load_state(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::domain_error("cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& ex) {
        throw std::domain_error(std::string("state file: invalid JSON: ") +
                                ex.what());
    }
    return state_from_json(j);
}

}  // namespace qdm
