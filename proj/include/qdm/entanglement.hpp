#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qdm/density_matrix.hpp"

namespace qdm {

struct PptReport {
    double min_eigenvalue = 0.0;
    bool is_ppt = false;
    double negativity = 0.0;
    Bipartition cut;
    // PPT is conclusive both ways only for a 2-qubit total system;
    // beyond that a PPT verdict leaves separability open.
    bool conclusive = false;
};

PptReport ppt_check(const DensityMatrix& rho, const Bipartition& cut);

struct ParametrizedFamily {
    std::string name;
    std::function<DensityMatrix(double)> generator;  // eps in [0,1]
    Bipartition cut;
};

// Bisection on the PPT/NPT boundary; requires PPT at eps=0 and NPT at
// eps=1, else std::domain_error.
double threshold_bisect(const ParametrizedFamily& family, double tol);

// One-qubit-vs-rest pseudo-pure cat family for the given n.
ParametrizedFamily cat_family(int n);
ParametrizedFamily werner_family();

std::vector<std::pair<int, double>> cat_threshold_table(int n_min, int n_max,
                                                        double tol);

struct PolarizationModel {
    // Achievable pseudo-pure polarization eps(n).
    std::function<double(int)> polarization;
    // Separability threshold eps_c(n).
    std::function<double(int)> threshold_curve;
};

// Default model: eps(n) = c n 2^-n with c calibrated so eps(2) = eps2.
PolarizationModel default_polarization_model(double eps2 = 1e-5);
// Full-separability bound around the maximally mixed state, 1/(1+2^(2n-1)).
double separable_ball_threshold(int n);
// One-vs-rest PPT threshold of the pseudo-pure cat family, 1/(1+2^(n-1)).
double cat_ppt_threshold(int n);

struct CrossingReport {
    struct Point {
        int n;
        double eps;
        double eps_c;
        bool extrapolated;  // n beyond the dense cap: curve value only
    };
    std::optional<int> n_cross;  // smallest n with eps(n) >= eps_c(n)
    std::vector<Point> curves;
};

CrossingReport crossing_analysis(const PolarizationModel& model, int n_max);

}  // namespace qdm
