#include "qdm/entanglement.hpp"

#include <cmath>

#include "qdm/states.hpp"

namespace qdm {

PptReport ppt_check(const DensityMatrix& rho, const Bipartition& cut) {
    Mat pt = partial_transpose(rho, cut);
    Eigen::VectorXd eigs = eig_hermitian(pt);
    PptReport r;
    r.cut = cut;
    r.min_eigenvalue = eigs.minCoeff();
    r.is_ppt = r.min_eigenvalue >= -kPsdTol;
    if (!r.is_ppt) {
        for (Eigen::Index i = 0; i < eigs.size(); ++i)
            if (eigs[i] < 0.0) r.negativity += -eigs[i];
    }
    r.conclusive = !r.is_ppt || rho.n_qubits() == 2;
    return r;
}

double threshold_bisect(const ParametrizedFamily& family, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    auto npt = [&family](double eps) {
        return !ppt_check(family.generator(eps), family.cut).is_ppt;
    };
    if (npt(0.0))
        throw std::domain_error("family is already NPT at epsilon = 0");
    if (!npt(1.0))
        throw std::domain_error("family is still PPT at epsilon = 1");
    double lo = 0.0, hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (npt(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

ParametrizedFamily werner_family() {
    return ParametrizedFamily{
        "werner", [](double eps) { return werner(eps); }, Bipartition({0}, 2)};
}

ParametrizedFamily cat_family(int n) {
    return ParametrizedFamily{
        "cat-" + std::to_string(n),
        [n](double eps) { return pseudo_pure(n, eps, cat_state(n)); },
        Bipartition({0}, n)};
}

std::vector<std::pair<int, double>> cat_threshold_table(int n_min, int n_max,
                                                        double tol) {
    if (n_min < 2 || n_max < n_min)
        throw std::invalid_argument("need 2 <= n_min <= n_max");
    std::vector<std::pair<int, double>> table;
    for (int n = n_min; n <= n_max; ++n)
        table.emplace_back(n, threshold_bisect(cat_family(n), tol));
    return table;
}

double separable_ball_threshold(int n) {
    return 1.0 / (1.0 + std::ldexp(1.0, 2 * n - 1));
}

double cat_ppt_threshold(int n) {
    return 1.0 / (1.0 + std::ldexp(1.0, n - 1));
}

PolarizationModel default_polarization_model(double eps2) {
    const double c = eps2 * 2.0;  // solves c * 2 * 2^-2 = eps2
    return PolarizationModel{
        [c](int n) { return c * n * std::ldexp(1.0, -n); },
        [](int n) { return separable_ball_threshold(n); }};
}

CrossingReport crossing_analysis(const PolarizationModel& model, int n_max) {
    CrossingReport report;
    for (int n = 2; n <= n_max; ++n) {
        const double eps = model.polarization(n);
        const double eps_c = model.threshold_curve(n);
        report.curves.push_back({n, eps, eps_c, n > dense_qubit_cap()});
        if (!report.n_cross && eps >= eps_c) report.n_cross = n;
    }
    return report;
}

}  // namespace qdm
