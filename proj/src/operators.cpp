#include "qdm/operators.hpp"

namespace qdm {

bool Operator::is_unitary(double tol) const {
    return (m * m.adjoint() - Mat::Identity(m.rows(), m.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
}

bool Operator::is_hermitian(double tol) const {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Operator tensor(const Operator& a, const Operator& b) {
    return Operator{kron(a.m, b.m)};
}

Operator identity_op(Eigen::Index dim) {
    return Operator{Mat::Identity(dim, dim)};
}

Operator pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return Operator{m};
}

Operator pauli_y() {
    Mat m(2, 2);
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return Operator{m};
}

Operator pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return Operator{m};
}

Operator hadamard() {
    Mat m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return Operator{m};
}

Operator raising_op() {
    Mat m(2, 2);
    m << 0, 1, 0, 0;
    return Operator{m};
}

Mat embed(const Mat& single, int q, int n) {
    if (single.rows() != 2 || single.cols() != 2)
        throw std::invalid_argument("embed expects a single-qubit operator");
    if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
    Mat out = (q == 0) ? single : Mat(Mat::Identity(2, 2));
    for (int k = 1; k < n; ++k)
        out = kron(out, k == q ? single : Mat(Mat::Identity(2, 2)));
    return out;
}

}  // namespace qdm
