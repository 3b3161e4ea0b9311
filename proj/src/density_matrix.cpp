#include "qdm/density_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace qdm {

namespace {
std::atomic<int> g_dense_cap{12};
}

int dense_qubit_cap() { return g_dense_cap.load(); }
void set_dense_qubit_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("dense cap must be positive");
    g_dense_cap.store(cap);
}

DensityMatrix::DensityMatrix(int n_qubits, Mat entries)
    : n_qubits_(n_qubits), m_(std::move(entries)) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be positive");
    if (n_qubits > dense_qubit_cap())
        throw resource_error("register of " + std::to_string(n_qubits) +
                             " qubits exceeds dense cap " +
                             std::to_string(dense_qubit_cap()));
    const Eigen::Index d = dim_for(n_qubits);
    if (m_.rows() != d || m_.cols() != d)
        throw std::invalid_argument("entries must be 2^n x 2^n");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("density matrix invariant violated: hermitian");
    if (std::abs(m_.trace().real() - 1.0) > kHermTol ||
        std::abs(m_.trace().imag()) > kHermTol)
        throw std::invalid_argument("density matrix invariant violated: unit trace");
    Eigen::SelfAdjointEigenSolver<Mat> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument(
            "density matrix invariant violated: positive semidefinite");
}

Bipartition::Bipartition(std::vector<int> a, int n) : side_a(std::move(a)), n_qubits(n) {
    std::sort(side_a.begin(), side_a.end());
    side_a.erase(std::unique(side_a.begin(), side_a.end()), side_a.end());
    if (side_a.empty()) throw std::invalid_argument("side A must be nonempty");
    if (side_a.front() < 0 || side_a.back() >= n)
        throw std::invalid_argument("qubit index out of range");
    if (static_cast<int>(side_a.size()) == n)
        throw std::invalid_argument("side B must be nonempty");
}

std::vector<int> Bipartition::side_b() const {
    std::vector<int> b;
    std::size_t k = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (k < side_a.size() && side_a[k] == q) {
            ++k;
        } else {
            b.push_back(q);
        }
    }
    return b;
}

Mat partial_trace_mat(const Mat& rho, int n, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    std::vector<int> k = keep;
    std::sort(k.begin(), k.end());
    if (k.front() < 0 || k.back() >= n)
        throw std::invalid_argument("qubit index out of range");
    std::vector<int> traced;
    std::size_t ki = 0;
    for (int q = 0; q < n; ++q) {
        if (ki < k.size() && k[ki] == q) {
            ++ki;
        } else {
            traced.push_back(q);
        }
    }
    const int nk = static_cast<int>(k.size());
    const int nt = static_cast<int>(traced.size());
    const Eigen::Index dk = dim_for(nk);
    const Eigen::Index dt = Eigen::Index{1} << nt;

    // Placement tables: full index = kplace[i] | tplace[t].
    std::vector<Eigen::Index> kplace(dk, 0), tplace(dt, 0);
    for (Eigen::Index i = 0; i < dk; ++i)
        for (int b = 0; b < nk; ++b)
            if ((i >> (nk - 1 - b)) & 1)
                kplace[i] |= Eigen::Index{1} << (n - 1 - k[b]);
    for (Eigen::Index t = 0; t < dt; ++t)
        for (int b = 0; b < nt; ++b)
            if ((t >> (nt - 1 - b)) & 1)
                tplace[t] |= Eigen::Index{1} << (n - 1 - traced[b]);

    Mat out = Mat::Zero(dk, dk);
    for (Eigen::Index i = 0; i < dk; ++i)
        for (Eigen::Index j = 0; j < dk; ++j) {
            cplx s = 0.0;
            for (Eigen::Index t = 0; t < dt; ++t)
                s += rho(kplace[i] | tplace[t], kplace[j] | tplace[t]);
            out(i, j) = s;
        }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    Mat out = partial_trace_mat(rho.mat(), rho.n_qubits(), keep);
    return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

Mat partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
    const int n = rho.n_qubits();
    if (cut.n_qubits != n) throw std::invalid_argument("cut/state dimension mismatch");
    Eigen::Index mask_b = 0;
    for (int q : cut.side_b()) mask_b |= Eigen::Index{1} << (n - 1 - q);
    const Eigen::Index mask_a = (dim_for(n) - 1) ^ mask_b;

    const Mat& m = rho.mat();
    Mat out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out((i & mask_a) | (j & mask_b), (j & mask_a) | (i & mask_b)) = m(i, j);
    return out;
}

Eigen::VectorXd eig_hermitian(const Mat& m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    Eigen::VectorXd vals = es.eigenvalues();
    return vals.reverse().eval();
}

std::pair<Eigen::VectorXd, Mat> eig_hermitian_full(const Mat& m) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    Eigen::VectorXd vals = es.eigenvalues().reverse().eval();
    Mat vecs = es.eigenvectors().rowwise().reverse().eval();
    return {std::move(vals), std::move(vecs)};
}

double entropy_of_eigs(const Eigen::VectorXd& eigs) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < eigs.size(); ++i) {
        const double l = eigs[i];
        if (l > kEntropyFloor) h -= l * std::log2(l);
    }
    return h;
}

double entropy(const DensityMatrix& rho) {
    return entropy_of_eigs(eig_hermitian(rho.mat()));
}

double entropy_2x2(const Mat& rho) {
    const double a = rho(0, 0).real();
    const double b = rho(1, 1).real();
    const double mean = 0.5 * (a + b);
    const double r = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(rho(0, 1)));
    double h = 0.0;
    for (double l : {mean + r, mean - r})
        if (l > kEntropyFloor) h -= l * std::log2(l);
    return h;
}

double expectation(const DensityMatrix& rho, const Mat& obs) {
    if (obs.rows() != rho.dim() || obs.cols() != rho.dim())
        throw std::invalid_argument("observable dimension mismatch");
    if ((obs - obs.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw std::invalid_argument("observable is not Hermitian");
    return (obs * rho.mat()).trace().real();
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& u) {
    if (u.rows() != rho.dim() || u.cols() != rho.dim())
        throw std::invalid_argument("unitary dimension mismatch");
    if ((u * u.adjoint() - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() >
        kHermTol)
        throw std::invalid_argument("operator is not unitary");
    return DensityMatrix(rho.n_qubits(), u * rho.mat() * u.adjoint());
}

}  // namespace qdm
