#pragma once

#include <set>
#include <string>

#include "qdm/types.hpp"

namespace qdm {

// Hermitian, unit-trace, positive-semidefinite matrix over n qubits.
// All three invariants are checked on construction; a violation throws
// std::invalid_argument naming the violated invariant.
class DensityMatrix {
public:
    DensityMatrix(int n_qubits, Mat entries);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return m_.rows(); }
    const Mat& mat() const { return m_; }

    double purity() const { return (m_ * m_).trace().real(); }

private:
    int n_qubits_;
    Mat m_;
};

// Bipartition of the qubit register into two nonempty disjoint sides.
struct Bipartition {
    std::vector<int> side_a;  // sorted, strictly increasing
    int n_qubits = 0;

    Bipartition() = default;  // empty placeholder; reports fill it in
    Bipartition(std::vector<int> a, int n);
    std::vector<int> side_b() const;
};

// Partial trace over the complement of `keep` (raw-matrix form;
// input need not be a valid state).
Mat partial_trace_mat(const Mat& rho, int n, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

// Transposes side B of the cut; Hermitian and trace-preserving but in
// general not PSD, hence a raw matrix.
Mat partial_transpose(const DensityMatrix& rho, const Bipartition& cut);

// Eigenvalues of a Hermitian matrix, sorted descending. Throws on
// non-Hermitian input.
Eigen::VectorXd eig_hermitian(const Mat& m);
// Same, with eigenvectors as columns (matching the descending order).
std::pair<Eigen::VectorXd, Mat> eig_hermitian_full(const Mat& m);

// von Neumann entropy in bits; eigenvalues below kEntropyFloor count as 0.
double entropy(const DensityMatrix& rho);
double entropy_of_eigs(const Eigen::VectorXd& eigs);
// Closed-form entropy of a 2x2 Hermitian PSD matrix (hot path for discord).
double entropy_2x2(const Mat& rho);

// Re Tr[O rho]; O must be Hermitian and dimension-matched.
double expectation(const DensityMatrix& rho, const Mat& obs);

// U rho U^dagger; U must be unitary.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Mat& u);

}  // namespace qdm
