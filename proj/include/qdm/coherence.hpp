#pragma once

#include <map>

#include "qdm/density_matrix.hpp"

namespace qdm {

// Squared-magnitude weight per coherence order p = M_row - M_col,
// where M is the total spin-z quantum number of the basis state.
struct CoherenceSpectrum {
    std::map<int, double> weights;  // p in [-n, n]
    double total = 0.0;             // equals Tr rho^2
};

CoherenceSpectrum coherence_spectrum(const DensityMatrix& rho);

// Conjugation by exp(-i phi sum_k sigma_z^k / 2): the order-p element
// picks up e^{-i p phi}; spectrum weights are unchanged.
DensityMatrix collective_rotation(const DensityMatrix& rho, double phi);

// Gaussian average over collective rotations: order-p element damped
// by exp(-p^2 sigma^2 / 2).
struct DephasingSpec {
    double sigma = 0.0;  // radians
};
DensityMatrix collective_dephasing(const DensityMatrix& rho,
                                   const DephasingSpec& spec);

struct MqSignal {
    std::vector<double> signal;    // overlap vs phi over [0, 2pi)
    std::vector<double> spectrum;  // |DFT| for bins 0..N/2
    int peak_order = 0;            // argmax over bins 1..N/2
};

// Gradient-label / time-reversal experiment: prepare the pseudo-pure
// cat state, rotate collectively by phi, undo the preparation, and
// record the |0...0> overlap. The dominant nonzero DFT bin is n.
// samples must be a power of two. The phi loop runs under OpenMP;
// mq_signal_serial is the reference path.
MqSignal mq_signal(int n, double epsilon, int samples);
MqSignal mq_signal_serial(int n, double epsilon, int samples);

// Unitary mapping |0...0> to the n-qubit cat state (H then CNOT chain).
Mat cat_preparation_unitary(int n);

}  // namespace qdm
