#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qdm {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerances used by all validity checks.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kEntropyFloor = 1e-12;

// Thrown when a requested register exceeds the dense-size cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Global dense cap on qubit counts (2^n x 2^n matrices). Default 12;
// the CLI --cap flag overrides it.
int dense_qubit_cap();
void set_dense_qubit_cap(int cap);

inline Eigen::Index dim_for(int n_qubits) {
    return Eigen::Index{1} << n_qubits;
}

// Bit of qubit q in basis index b; qubit 0 is the most significant
// tensor factor throughout.
inline int qubit_bit(Eigen::Index b, int q, int n) {
    return static_cast<int>((b >> (n - 1 - q)) & 1);
}

}  // namespace qdm
