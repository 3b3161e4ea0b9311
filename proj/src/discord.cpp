#include "qdm/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qdm/operators.hpp"

namespace qdm {

namespace {

constexpr double kPi = std::numbers::pi;

struct MeasurementContext {
    const DensityMatrix* rho;
    std::vector<int> keep_a;
    int y_qubit;
    int n;
    double h_a;  // H(A), reused across grid points
};

MeasurementContext make_context(const DensityMatrix& rho, const Bipartition& cut) {
    if (cut.n_qubits != rho.n_qubits())
        throw std::invalid_argument("cut/state dimension mismatch");
    const auto b = cut.side_b();
    if (b.size() != 1)
        throw std::invalid_argument(
            "unsupported: measured side must be a single qubit");
    MeasurementContext ctx;
    ctx.rho = &rho;
    ctx.keep_a = cut.side_a;
    ctx.y_qubit = b[0];
    ctx.n = rho.n_qubits();
    ctx.h_a = entropy(partial_trace(rho, cut.side_a));
    return ctx;
}

// sum_j p_j H(rho_{A|j}) for the rank-1 pair at the given angles.
double conditional_entropy_ctx(const MeasurementContext& ctx, double theta,
                               double phi) {
    const ProjectiveBasis basis{theta, phi};
    const Mat pis[2] = {basis.pi_plus(), basis.pi_minus()};
    double h = 0.0;
    for (const Mat& pi : pis) {
        const Mat proj = embed(pi, ctx.y_qubit, ctx.n);
        const Mat m = proj * ctx.rho->mat() * proj;
        const double p = m.trace().real();
        if (p < 1e-12) continue;
        Mat red = partial_trace_mat(m, ctx.n, ctx.keep_a) / p;
        if (red.rows() == 2)
            h += p * entropy_2x2(red);
        else
            h += p * entropy_of_eigs(eig_hermitian(red));
    }
    return h;
}

struct GridBest {
    double value = -std::numeric_limits<double>::infinity();
    long index = std::numeric_limits<long>::max();

    // Total order: higher value wins, ties go to the lower index, so
    // the reduction result is independent of evaluation order.
    void consider(double v, long idx) {
        if (v > value || (v == value && idx < index)) {
            value = v;
            index = idx;
        }
    }
    void merge(const GridBest& o) { consider(o.value, o.index); }
};

std::pair<double, ProjectiveBasis> grid_scan_impl(const MeasurementContext& ctx,
                                                  int n_theta, int n_phi,
                                                  bool parallel) {
    if (n_theta < 2 || n_phi < 1)
        throw std::invalid_argument("grid must have at least 2x1 points");
    const long total = static_cast<long>(n_theta) * n_phi;
    auto angles = [&](long idx) {
        const int i = static_cast<int>(idx / n_phi);
        const int j = static_cast<int>(idx % n_phi);
        return std::pair<double, double>{kPi * i / (n_theta - 1),
                                         2.0 * kPi * j / n_phi};
    };

    GridBest best;
    if (parallel) {
#pragma omp parallel
        {
            GridBest local;
#pragma omp for nowait
            for (long idx = 0; idx < total; ++idx) {
                const auto [t, p] = angles(idx);
                local.consider(ctx.h_a - conditional_entropy_ctx(ctx, t, p), idx);
            }
#pragma omp critical
            best.merge(local);
        }
    } else {
        for (long idx = 0; idx < total; ++idx) {
            const auto [t, p] = angles(idx);
            best.consider(ctx.h_a - conditional_entropy_ctx(ctx, t, p), idx);
        }
    }
    const auto [t, p] = angles(best.index);
    return {best.value, ProjectiveBasis{t, p}};
}

}  // namespace

Mat ProjectiveBasis::pi_plus() const {
    Vec v(2);
    v[0] = std::cos(theta / 2.0);
    v[1] = std::polar(std::sin(theta / 2.0), phi);
    return v * v.adjoint();
}

Mat ProjectiveBasis::pi_minus() const {
    return Mat::Identity(2, 2) - pi_plus();
}

double mutual_information(const DensityMatrix& rho, const Bipartition& cut) {
    if (cut.n_qubits != rho.n_qubits())
        throw std::invalid_argument("cut/state dimension mismatch");
    const double h_a = entropy(partial_trace(rho, cut.side_a));
    const double h_b = entropy(partial_trace(rho, cut.side_b()));
    return h_a + h_b - entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, const Bipartition& cut,
                           const ProjectiveBasis& basis) {
    const auto ctx = make_context(rho, cut);
    return conditional_entropy_ctx(ctx, basis.theta, basis.phi);
}

double classical_j(const DensityMatrix& rho, const Bipartition& cut,
                   const ProjectiveBasis& basis) {
    const auto ctx = make_context(rho, cut);
    return ctx.h_a - conditional_entropy_ctx(ctx, basis.theta, basis.phi);
}

std::pair<double, ProjectiveBasis> scan_basis_grid(const DensityMatrix& rho,
                                                   const Bipartition& cut,
                                                   int n_theta, int n_phi) {
    return grid_scan_impl(make_context(rho, cut), n_theta, n_phi, true);
}

std::pair<double, ProjectiveBasis> scan_basis_grid_serial(
    const DensityMatrix& rho, const Bipartition& cut, int n_theta, int n_phi) {
    return grid_scan_impl(make_context(rho, cut), n_theta, n_phi, false);
}

std::pair<double, ProjectiveBasis> optimize_classical_j(
    const DensityMatrix& rho, const Bipartition& cut,
    const GridSettings& settings) {
    const auto ctx = make_context(rho, cut);
    auto [best, basis] =
        grid_scan_impl(ctx, settings.n_theta, settings.n_phi, settings.parallel);

    // Compass refinement: probe the 8 surrounding points; move on strict
    // improvement (first winner in fixed order), otherwise halve the step.
    double radius = std::max(kPi / (settings.n_theta - 1),
                             2.0 * kPi / settings.n_phi);
    double t = basis.theta, p = basis.phi;
    static constexpr int kDt[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int kDp[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    for (int it = 0; it < settings.refine_iters; ++it) {
        double cand_best = best;
        double cand_t = t, cand_p = p;
        for (int k = 0; k < 8; ++k) {
            double tt = std::clamp(t + kDt[k] * radius, 0.0, kPi);
            double pp = std::fmod(p + kDp[k] * radius + 2.0 * kPi, 2.0 * kPi);
            const double v = ctx.h_a - conditional_entropy_ctx(ctx, tt, pp);
            if (v > cand_best) {
                cand_best = v;
                cand_t = tt;
                cand_p = pp;
            }
        }
        if (cand_best > best) {
            best = cand_best;
            t = cand_t;
            p = cand_p;
        } else {
            radius *= 0.5;
        }
    }
    return {best, ProjectiveBasis{t, p}};
}

DiscordReport discord(const DensityMatrix& rho, const Bipartition& cut,
                      const GridSettings& settings) {
    DiscordReport r;
    r.mutual_info = mutual_information(rho, cut);
    r.j_at_basis = classical_j(rho, cut, ProjectiveBasis{0.0, 0.0});
    auto [jmax, basis] = optimize_classical_j(rho, cut, settings);
    r.j_max = jmax;
    r.basis_argmax = basis;
    double d = r.mutual_info - r.j_max;
    if (d < 0.0 && d > -1e-8) d = 0.0;
    r.d_standard = d;
    r.d_paper_sign = r.j_max - r.mutual_info;
    return r;
}

}  // namespace qdm
