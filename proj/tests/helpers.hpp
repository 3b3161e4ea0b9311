#pragma once

#include <cstdint>

#include "qdm/density_matrix.hpp"
#include "qdm/dqc1.hpp"
#include "qdm/operators.hpp"
#include "qdm/rng.hpp"

namespace qdm::test {

// Ginibre construction: G G^dagger normalized to unit trace.
inline DensityMatrix random_density(int n, std::uint64_t seed) {
    const Eigen::Index d = dim_for(n);
    Mat g(d, d);
    std::uint64_t c = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            auto [re, im] = rng::gaussian_pair(seed, 0xd15ca4dULL, c++);
            g(i, j) = cplx(re, im);
        }
    Mat m = g * g.adjoint();
    m /= m.trace();
    return DensityMatrix(n, std::move(m));
}

inline Mat random_hermitian(Eigen::Index d, std::uint64_t seed) {
    Mat g(d, d);
    std::uint64_t c = 0;
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            auto [re, im] = rng::gaussian_pair(seed, 0x4e3a7ULL, c++);
            g(i, j) = cplx(re, im);
        }
    return 0.5 * (g + g.adjoint());
}

inline Vec random_pure(int n, std::uint64_t seed) {
    const Eigen::Index d = dim_for(n);
    Vec v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        auto [re, im] = rng::gaussian_pair(seed, 0x907eULL, static_cast<std::uint64_t>(i));
        v[i] = cplx(re, im);
    }
    v.normalize();
    return v;
}

}  // namespace qdm::test
