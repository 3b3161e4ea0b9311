#include "qdm/dqc1.hpp"

#include <cmath>
#include <numbers>

#include "qdm/rng.hpp"
#include "qdm/states.hpp"

namespace qdm {

namespace rng {
std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t counter) {
    const double u1 = detail::uniform_open(seed, stream, 2 * counter);
    const double u2 = uniform(seed, stream, 2 * counter + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(a), r * std::sin(a)};
}
}  // namespace rng

Operator controlled(const Operator& u) {
    if (!u.is_unitary()) throw std::invalid_argument("operator is not unitary");
    const Eigen::Index d = u.dim();
    Mat m = Mat::Identity(2 * d, 2 * d);
    m.block(d, d, d, d) = u.m;
    return Operator{m};
}

namespace {

int qubit_count_for(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) ++n;
    if ((Eigen::Index{1} << n) != dim)
        throw std::invalid_argument("dimension must be a power of 2");
    return n;
}

// Deviation expectations of the clean qubit after H + controlled-U,
// already divided by epsilon. Returns (Re, Im) of Tr U / 2^n.
std::complex<double> dqc1_signal(const Operator& u, double epsilon,
                                 bool final_hadamard_readout) {
    if (!u.is_unitary()) throw std::invalid_argument("operator is not unitary");
    if (epsilon <= 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in (0,1]");
    const int n = qubit_count_for(u.dim());
    const int n_total = n + 1;
    if (n_total > dense_qubit_cap())
        throw resource_error("DQC1 register exceeds dense cap");

    const Mat h1 = embed(hadamard().m, 0, n_total);
    const Mat cu = controlled(u).m;
    DensityMatrix rho = deviation_state(n_total, epsilon);
    rho = apply_unitary(rho, h1);
    rho = apply_unitary(rho, cu);

    double sx, sy;
    if (final_hadamard_readout) {
        // Literal circuit: H then sigma_z for Re; S^dagger, H, sigma_z
        // for the Im quadrature.
        const Mat sz1 = embed(pauli_z().m, 0, n_total);
        Mat sdag = Mat::Identity(2, 2);
        sdag(1, 1) = cplx(0, -1);
        sx = expectation(apply_unitary(rho, h1), sz1);
        sy = expectation(apply_unitary(apply_unitary(rho, embed(sdag, 0, n_total)), h1),
                         sz1);
    } else {
        sx = expectation(rho, embed(pauli_x().m, 0, n_total));
        sy = expectation(rho, embed(pauli_y().m, 0, n_total));
    }
    // The 1 - eps sigma_z deviation carries the signal with a minus sign.
    return {-sx / epsilon, -sy / epsilon};
}

}  // namespace

std::complex<double> dqc1_exact(const Operator& u, double epsilon,
                                bool final_hadamard_readout) {
    return dqc1_signal(u, epsilon, final_hadamard_readout);
}

std::pair<ShotResult, ShotResult> dqc1_sampled(const Operator& u, double epsilon,
                                               long long shots,
                                               std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be at least 1");
    if (epsilon == 0.0) throw std::domain_error("degenerate signal: epsilon = 0");
    const std::complex<double> exact = dqc1_signal(u, epsilon, false);

    auto sample = [&](double mean_scaled, std::uint64_t quadrature) {
        // mean_scaled is the eps-scaled +/-1 expectation, in [-1, 1].
        const double p_plus = 0.5 * (1.0 + mean_scaled);
        long long sum = 0;
#pragma omp parallel for reduction(+ : sum)
        for (long long i = 0; i < shots; ++i)
            sum += rng::uniform(seed, quadrature, static_cast<std::uint64_t>(i)) <
                           p_plus
                       ? 1
                       : -1;
        const double m = static_cast<double>(sum) / static_cast<double>(shots);
        ShotResult r;
        r.estimate = m / epsilon;
        r.std_err = std::sqrt(std::max(0.0, 1.0 - m * m) /
                              static_cast<double>(shots)) /
                    epsilon;
        r.shots = shots;
        r.seed = seed;
        return r;
    };

    return {sample(epsilon * exact.real(), 0), sample(epsilon * exact.imag(), 1)};
}

Operator random_unitary(Eigen::Index dim, std::uint64_t seed) {
    qubit_count_for(dim);  // power-of-2 check
    Mat g(dim, dim);
    std::uint64_t c = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) {
            auto [re, im] = rng::gaussian_pair(seed, 0x67696e6962726521ULL, c++);
            g(i, j) = cplx(re, im);
        }
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase freedom so the distribution is Haar.
    for (Eigen::Index j = 0; j < dim; ++j) {
        const cplx d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return Operator{q};
}

}  // namespace qdm
