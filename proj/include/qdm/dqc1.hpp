#pragma once

#include <cstdint>

#include "qdm/operators.hpp"

namespace qdm {

// diag(I, U) with the control as the more significant qubit.
Operator controlled(const Operator& u);

// One-clean-qubit trace estimation: deviation state on n+1 qubits,
// Hadamard on the clean qubit, controlled-U, deviation readout of the
// clean qubit rescaled by 1/epsilon. Returns Tr U / 2^n.
//
// With final_hadamard_readout the literal circuit ending in H then a
// sigma_z measurement is simulated instead (plus an S^dagger variant
// for the imaginary quadrature); both readings agree exactly.
std::complex<double> dqc1_exact(const Operator& u, double epsilon = 1e-5,
                                bool final_hadamard_readout = false);

struct ShotResult {
    double estimate = 0.0;
    double std_err = 0.0;
    long long shots = 0;
    std::uint64_t seed = 0;
};

// Finite-shot model: per quadrature, `shots` +/-1 outcomes whose mean is
// the epsilon-scaled exact expectation, drawn by the counter-based
// generator keyed by (seed, quadrature, shot index). Estimates are
// rescaled by 1/epsilon.
std::pair<ShotResult, ShotResult> dqc1_sampled(const Operator& u,
                                               double epsilon,
                                               long long shots,
                                               std::uint64_t seed);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// R diagonal phase fixed. Deterministic per seed.
Operator random_unitary(Eigen::Index dim, std::uint64_t seed);

}  // namespace qdm
