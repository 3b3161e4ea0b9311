#include "qdm/coherence.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "qdm/operators.hpp"
#include "qdm/states.hpp"

namespace qdm {

namespace {

constexpr double kPi = std::numbers::pi;

// Twice the total spin-z quantum number of basis index b (integer-valued).
int two_m(Eigen::Index b, int n) {
    return n - 2 * std::popcount(static_cast<std::uint64_t>(b));
}

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<cplx>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * kPi / static_cast<double>(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

MqSignal mq_signal_impl(int n, double epsilon, int samples, bool parallel) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (samples < 4 || (samples & (samples - 1)) != 0)
        throw std::invalid_argument("sample count must be a power of two >= 4");
    if (samples / 2 <= n)
        throw std::invalid_argument("sample count too small to resolve order n");

    const Mat prep = cat_preparation_unitary(n);
    const Mat prep_adj = prep.adjoint();
    const DensityMatrix initial = pseudo_pure(n, epsilon, cat_state(n));

    std::vector<double> signal(static_cast<std::size_t>(samples));
#pragma omp parallel for if (parallel)
    for (int k = 0; k < samples; ++k) {
        const double phi = 2.0 * kPi * k / samples;
        DensityMatrix rho = collective_rotation(initial, phi);
        // "Time reversal": exact adjoint of the preparation.
        rho = apply_unitary(rho, prep_adj);
        signal[static_cast<std::size_t>(k)] = rho.mat()(0, 0).real();
    }

    std::vector<cplx> spec(signal.begin(), signal.end());
    fft(spec);
    MqSignal out;
    out.signal = std::move(signal);
    out.spectrum.resize(static_cast<std::size_t>(samples / 2 + 1));
    for (int b = 0; b <= samples / 2; ++b)
        out.spectrum[static_cast<std::size_t>(b)] =
            std::abs(spec[static_cast<std::size_t>(b)]);
    out.peak_order = 1;
    for (int b = 2; b <= samples / 2; ++b)
        if (out.spectrum[static_cast<std::size_t>(b)] >
            out.spectrum[static_cast<std::size_t>(out.peak_order)])
            out.peak_order = b;
    return out;
}

}  // namespace

CoherenceSpectrum coherence_spectrum(const DensityMatrix& rho) {
    const int n = rho.n_qubits();
    CoherenceSpectrum s;
    for (int p = -n; p <= n; ++p) s.weights[p] = 0.0;
    const Mat& m = rho.mat();
    for (Eigen::Index a = 0; a < m.rows(); ++a)
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            const double w = std::norm(m(a, b));
            if (w == 0.0) continue;
            const int p = (two_m(a, n) - two_m(b, n)) / 2;
            s.weights[p] += w;
            s.total += w;
        }
    return s;
}

DensityMatrix collective_rotation(const DensityMatrix& rho, double phi) {
    const int n = rho.n_qubits();
    Mat m = rho.mat();
    for (Eigen::Index a = 0; a < m.rows(); ++a)
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            const int p = (two_m(a, n) - two_m(b, n)) / 2;
            if (p != 0) m(a, b) *= std::polar(1.0, -p * phi);
        }
    return DensityMatrix(n, std::move(m));
}

DensityMatrix collective_dephasing(const DensityMatrix& rho,
                                   const DephasingSpec& spec) {
    if (spec.sigma < 0.0) throw std::invalid_argument("sigma must be nonnegative");
    const int n = rho.n_qubits();
    Mat m = rho.mat();
    for (Eigen::Index a = 0; a < m.rows(); ++a)
        for (Eigen::Index b = 0; b < m.cols(); ++b) {
            const int p = (two_m(a, n) - two_m(b, n)) / 2;
            if (p != 0)
                m(a, b) *= std::exp(-0.5 * p * p * spec.sigma * spec.sigma);
        }
    return DensityMatrix(n, std::move(m));
}

Mat cat_preparation_unitary(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Mat u = embed(hadamard().m, 0, n);
    for (int t = 1; t < n; ++t) {
        // CNOT with control 0, target t, as a dense permutation.
        const Eigen::Index d = dim_for(n);
        Mat cnot = Mat::Zero(d, d);
        for (Eigen::Index b = 0; b < d; ++b) {
            Eigen::Index to = b;
            if (qubit_bit(b, 0, n)) to ^= Eigen::Index{1} << (n - 1 - t);
            cnot(to, b) = 1.0;
        }
        u = cnot * u;
    }
    return u;
}

MqSignal mq_signal(int n, double epsilon, int samples) {
    return mq_signal_impl(n, epsilon, samples, true);
}

MqSignal mq_signal_serial(int n, double epsilon, int samples) {
    return mq_signal_impl(n, epsilon, samples, false);
}

}  // namespace qdm
