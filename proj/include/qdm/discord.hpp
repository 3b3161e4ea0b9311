#pragma once

#include "qdm/density_matrix.hpp"

namespace qdm {

// Rank-1 projector pair on a single qubit, parametrized by Bloch angles.
struct ProjectiveBasis {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2pi)

    Mat pi_plus() const;   // |v><v|, v = (cos t/2, e^{i phi} sin t/2)
    Mat pi_minus() const;  // I - pi_plus
};

// H(A) + H(B) - H(A,B) in bits across the cut.
double mutual_information(const DensityMatrix& rho, const Bipartition& cut);

// sum_j p_j H(rho_{A|j}) with the projective measurement on side B,
// which must be a single qubit. Outcomes with p_j < 1e-12 contribute 0.
double conditional_entropy(const DensityMatrix& rho, const Bipartition& cut,
                           const ProjectiveBasis& basis);

// J = H(A) - H(A | measured B).
double classical_j(const DensityMatrix& rho, const Bipartition& cut,
                   const ProjectiveBasis& basis);

struct GridSettings {
    int n_theta = 64;
    int n_phi = 128;
    int refine_iters = 200;
    bool parallel = true;
};

// Coarse (theta, phi) grid scan followed by deterministic compass
// refinement around the best cell. Ties break to the lowest grid index,
// so the result is independent of thread count.
std::pair<double, ProjectiveBasis> optimize_classical_j(
    const DensityMatrix& rho, const Bipartition& cut,
    const GridSettings& settings = {});

// Serial reference for the grid scan; must agree bitwise with the
// OpenMP path.
std::pair<double, ProjectiveBasis> scan_basis_grid_serial(
    const DensityMatrix& rho, const Bipartition& cut, int n_theta, int n_phi);
std::pair<double, ProjectiveBasis> scan_basis_grid(
    const DensityMatrix& rho, const Bipartition& cut, int n_theta, int n_phi);

struct DiscordReport {
    double mutual_info = 0.0;     // I, bits
    double j_at_basis = 0.0;      // J at the sigma_z basis
    double j_max = 0.0;           // optimized J
    ProjectiveBasis basis_argmax;
    double d_standard = 0.0;      // I - J_max, clipped at 0 within 1e-8
    double d_paper_sign = 0.0;    // J_max - I
};

DiscordReport discord(const DensityMatrix& rho, const Bipartition& cut,
                      const GridSettings& settings = {});

}  // namespace qdm
