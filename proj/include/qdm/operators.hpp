#pragma once

#include "qdm/types.hpp"

namespace qdm {

// Complex square matrix with on-demand unitarity/Hermiticity checks.
struct Operator {
    Mat m;

    Eigen::Index dim() const { return m.rows(); }
    bool is_unitary(double tol = kHermTol) const;
    bool is_hermitian(double tol = kHermTol) const;
};

Mat kron(const Mat& a, const Mat& b);
Operator tensor(const Operator& a, const Operator& b);

Operator identity_op(Eigen::Index dim);
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator hadamard();
// I_+ = (sigma_x + i sigma_y)/2, the single-spin raising operator.
Operator raising_op();

// Single-qubit operator placed at position q of an n-qubit register
// (identity elsewhere).
Mat embed(const Mat& single, int q, int n);

}  // namespace qdm
