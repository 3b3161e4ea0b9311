#pragma once

#include <array>

#include "qdm/density_matrix.hpp"
#include "qdm/operators.hpp"

namespace qdm {

struct ThermalSpec {
    Mat hamiltonian;  // Hermitian, 2^n x 2^n
    double beta = 0.0;
    int n_qubits = 0;
};

// exp(-beta H)/Z via eigendecomposition of H. With first_order set,
// the normalized truncation (1 - beta H)/Tr(1 - beta H) instead.
DensityMatrix thermal_state(const ThermalSpec& spec, bool first_order = false);

// (1-eps)/4 * I + eps |Psi+><Psi+| with Psi+ = (|00>+|11>)/sqrt(2).
DensityMatrix werner(double epsilon);

// (1-eps)/2^n * I + eps |psi><psi|.
DensityMatrix pseudo_pure(int n, double epsilon, const Vec& psi);

// (|0...0> + |1...1>)/sqrt(2).
Vec cat_state(int n);

// Bell basis in the fixed order
//   0: Psi+ = (|00>+|11>)/sqrt(2)
//   1: Phi+ = (|01>+|10>)/sqrt(2)
//   2: Phi- = (|01>-|10>)/sqrt(2)
//   3: Psi- = (|00>-|11>)/sqrt(2)
Vec bell_state(int k);

// (1 -/+ eps sigma_z^1)/2^n, identity on the remaining qubits. The
// default sign is the minus form; plus_sign selects 1 + eps sigma_z^1.
DensityMatrix deviation_state(int n, double epsilon, bool plus_sign = false);

// Convex mixture of the four Bell projectors, in the order above.
DensityMatrix bell_mixture(const std::array<double, 4>& weights);

struct SeparableDecomposition {
    struct Term {
        double weight;
        DensityMatrix rho_a;
        DensityMatrix rho_b;
    };
    std::vector<Term> terms;
};

// Max elementwise |sum_i a_i rho_a(i) (x) rho_b(i) - rho|. A residual
// below 1e-10 certifies separability of rho across the implied cut.
double verify_separable_decomposition(const SeparableDecomposition& d,
                                      const DensityMatrix& rho);

// Schmidt-rank-1 test: purity of the reduced state across the cut.
bool is_product(const Vec& psi, const Bipartition& cut);

}  // namespace qdm
