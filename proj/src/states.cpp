#include "qdm/states.hpp"

#include <cmath>

namespace qdm {

DensityMatrix thermal_state(const ThermalSpec& spec, bool first_order) {
    const Eigen::Index d = dim_for(spec.n_qubits);
    if (spec.hamiltonian.rows() != d || spec.hamiltonian.cols() != d)
        throw std::invalid_argument("Hamiltonian dimension mismatch");
    if (spec.beta < 0.0) throw std::invalid_argument("beta must be nonnegative");

    if (first_order) {
        Mat m = Mat::Identity(d, d) - spec.beta * spec.hamiltonian;
        m /= m.trace();
        return DensityMatrix(spec.n_qubits, std::move(m));
    }
    auto [vals, vecs] = eig_hermitian_full(spec.hamiltonian);
    // Shift by the minimum eigenvalue so the exponentials stay finite.
    const double shift = vals.minCoeff();
    Eigen::VectorXd w(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        w[i] = std::exp(-spec.beta * (vals[i] - shift));
    w /= w.sum();
    Mat m = vecs * w.asDiagonal() * vecs.adjoint();
    return DensityMatrix(spec.n_qubits, std::move(m));
}

Vec bell_state(int k) {
    Vec v = Vec::Zero(4);
    const double s = 1.0 / std::sqrt(2.0);
    switch (k) {
        case 0: v[0] = s; v[3] = s; break;   // Psi+
        case 1: v[1] = s; v[2] = s; break;   // Phi+
        case 2: v[1] = s; v[2] = -s; break;  // Phi-
        case 3: v[0] = s; v[3] = -s; break;  // Psi-
        default: throw std::invalid_argument("Bell index must be 0..3");
    }
    return v;
}

DensityMatrix werner(double epsilon) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in [0,1]");
    const Vec psi = bell_state(0);
    Mat m = (1.0 - epsilon) / 4.0 * Mat::Identity(4, 4) +
            epsilon * (psi * psi.adjoint());
    return DensityMatrix(2, std::move(m));
}

DensityMatrix pseudo_pure(int n, double epsilon, const Vec& psi) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in [0,1]");
    const Eigen::Index d = dim_for(n);
    if (psi.size() != d) throw std::invalid_argument("state vector dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > kHermTol)
        throw std::invalid_argument("state vector must be normalized");
    Mat m = (1.0 - epsilon) / static_cast<double>(d) * Mat::Identity(d, d) +
            epsilon * (psi * psi.adjoint());
    return DensityMatrix(n, std::move(m));
}

Vec cat_state(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const Eigen::Index d = dim_for(n);
    Vec v = Vec::Zero(d);
    const double s = 1.0 / std::sqrt(2.0);
    v[0] = s;
    v[d - 1] = s;
    return v;
}

DensityMatrix deviation_state(int n, double epsilon, bool plus_sign) {
    if (std::abs(epsilon) > 1.0)
        throw std::invalid_argument("|epsilon| must not exceed 1");
    const Eigen::Index d = dim_for(n);
    const double sign = plus_sign ? 1.0 : -1.0;
    Mat m = Mat::Identity(d, d);
    const Mat sz1 = embed(pauli_z().m, 0, n);
    m += sign * epsilon * sz1;
    m /= static_cast<double>(d);
    return DensityMatrix(n, std::move(m));
}

DensityMatrix bell_mixture(const std::array<double, 4>& weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kHermTol)
        throw std::invalid_argument("weights must sum to 1");
    Mat m = Mat::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
        const Vec psi = bell_state(k);
        m += weights[static_cast<std::size_t>(k)] * (psi * psi.adjoint());
    }
    return DensityMatrix(2, std::move(m));
}

double verify_separable_decomposition(const SeparableDecomposition& d,
                                      const DensityMatrix& rho) {
    if (d.terms.empty()) throw std::invalid_argument("decomposition is empty");
    double wsum = 0.0;
    Mat acc = Mat::Zero(rho.dim(), rho.dim());
    for (const auto& t : d.terms) {
        if (t.weight < 0.0) throw std::invalid_argument("weights must be nonnegative");
        Mat prod = kron(t.rho_a.mat(), t.rho_b.mat());
        if (prod.rows() != rho.dim())
            throw std::invalid_argument("decomposition dimension mismatch");
        acc += t.weight * prod;
        wsum += t.weight;
    }
    if (std::abs(wsum - 1.0) > kHermTol)
        throw std::invalid_argument("weights must sum to 1");
    return (acc - rho.mat()).cwiseAbs().maxCoeff();
}

bool is_product(const Vec& psi, const Bipartition& cut) {
    if (std::abs(psi.norm() - 1.0) > kHermTol)
        throw std::invalid_argument("state vector must be normalized");
    const int n = cut.n_qubits;
    if (psi.size() != dim_for(n))
        throw std::invalid_argument("cut/state dimension mismatch");
    Mat rho = psi * psi.adjoint();
    Mat red = partial_trace_mat(rho, n, cut.side_a);
    const double purity = (red * red).trace().real();
    return purity >= 1.0 - 1e-10;
}

}  // namespace qdm
