#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qdm/dqc1.hpp"
#include "qdm/states.hpp"

using namespace qdm;

TEST_CASE("controlled gates") {
    SUBCASE("controlled X is CNOT") {
        const Mat c = controlled(pauli_x()).m;
        Mat cnot = Mat::Zero(4, 4);
        cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
        CHECK((c - cnot).cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("controlled identity is identity") {
        CHECK((controlled(identity_op(4)).m - Mat::Identity(8, 8))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
    }
    SUBCASE("controlled of a random unitary is unitary") {
        for (std::uint64_t s = 0; s < 5; ++s)
            CHECK(controlled(random_unitary(8, 400 + s)).is_unitary());
    }
    SUBCASE("non-unitary rejected") {
        CHECK_THROWS_AS(controlled(Operator{2.0 * Mat::Identity(2, 2)}),
                        std::invalid_argument);
    }
}

TEST_CASE("exact trace estimation") {
    SUBCASE("identity gives 1") {
        const auto v = dqc1_exact(identity_op(8));
        CHECK(std::abs(v.real() - 1.0) < 1e-10);
        CHECK(std::abs(v.imag()) < 1e-10);
    }
    SUBCASE("traceless unitary gives 0") {
        const Operator u = tensor(pauli_x(), identity_op(4));
        CHECK(std::abs(dqc1_exact(u)) < 1e-10);
    }
    SUBCASE("random unitaries match the direct trace oracle") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const int n = 1 + static_cast<int>(s % 5);
            const Operator u = random_unitary(dim_for(n), 500 + s);
            const cplx oracle = u.m.trace() / static_cast<double>(dim_for(n));
            CHECK(std::abs(dqc1_exact(u) - oracle) < 1e-10);
        }
    }
    SUBCASE("epsilon independence") {
        const Operator u = random_unitary(8, 510);
        const cplx ref = dqc1_exact(u, 1.0);
        for (double eps : {1e-5, 1e-3, 0.1})
            CHECK(std::abs(dqc1_exact(u, eps) - ref) < 1e-9);
    }
    SUBCASE("normalized trace bound") {
        for (std::uint64_t s = 0; s < 10; ++s)
            CHECK(std::abs(dqc1_exact(random_unitary(16, 520 + s))) <= 1.0 + 1e-12);
    }
    SUBCASE("adjoint conjugates the estimate") {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Operator u = random_unitary(8, 530 + s);
            const Operator udag{u.m.adjoint()};
            CHECK(std::abs(dqc1_exact(udag) - std::conj(dqc1_exact(u))) < 1e-10);
        }
    }
    SUBCASE("literal final-Hadamard circuit agrees") {
        for (std::uint64_t s = 0; s < 5; ++s) {
            const Operator u = random_unitary(8, 540 + s);
            CHECK(std::abs(dqc1_exact(u, 1e-3, true) - dqc1_exact(u, 1e-3, false)) <
                  1e-9);
        }
    }
    SUBCASE("cap enforced") {
        const int old = dense_qubit_cap();
        set_dense_qubit_cap(3);
        CHECK_THROWS_AS(dqc1_exact(identity_op(8)), resource_error);
        set_dense_qubit_cap(old);
    }
}

TEST_CASE("sampled trace estimation") {
    const Operator u = random_unitary(4, 600);
    SUBCASE("determinism per seed") {
        const auto a = dqc1_sampled(u, 0.5, 5000, 42);
        const auto b = dqc1_sampled(u, 0.5, 5000, 42);
        CHECK(a.first.estimate == b.first.estimate);
        CHECK(a.second.estimate == b.second.estimate);
        const auto c = dqc1_sampled(u, 0.5, 5000, 43);
        CHECK(a.first.estimate != c.first.estimate);
    }
    SUBCASE("converges to the exact value") {
        const cplx exact = dqc1_exact(u, 1.0);
        const auto [re, im] = dqc1_sampled(u, 1.0, 1000000, 7);
        CHECK(std::abs(re.estimate - exact.real()) < 5 * re.std_err);
        CHECK(std::abs(im.estimate - exact.imag()) < 5 * im.std_err);
    }
    SUBCASE("stderr formula") {
        const auto [re, im] = dqc1_sampled(u, 1.0, 10000, 9);
        CHECK(re.std_err ==
              doctest::Approx(std::sqrt((1 - re.estimate * re.estimate) / 10000))
                  .epsilon(1e-12));
        (void)im;
    }
    SUBCASE("degenerate signal rejected") {
        CHECK_THROWS_AS(dqc1_sampled(u, 0.0, 100, 1), std::domain_error);
    }
}

TEST_CASE("random unitaries") {
    SUBCASE("unitary and deterministic per seed") {
        const Operator a = random_unitary(8, 700);
        const Operator b = random_unitary(8, 700);
        CHECK(a.is_unitary(1e-10));
        CHECK((a.m - b.m).cwiseAbs().maxCoeff() == 0.0);
        const Operator c = random_unitary(8, 701);
        CHECK((a.m - c.m).cwiseAbs().maxCoeff() > 1e-3);
    }
    SUBCASE("eigenvalue arguments roughly uniform (chi-square)") {
        constexpr int kBins = 16;
        constexpr int kSamples = 1000;
        int counts[kBins] = {};
        for (int s = 0; s < kSamples; ++s) {
            Eigen::ComplexEigenSolver<Mat> es(random_unitary(4, 800 + s).m, false);
            for (int i = 0; i < 4; ++i) {
                double a = std::arg(es.eigenvalues()[i]);
                if (a < 0) a += 2 * M_PI;
                int b = std::min(kBins - 1, static_cast<int>(a / (2 * M_PI) * kBins));
                ++counts[b];
            }
        }
        const double expected = 4.0 * kSamples / kBins;
        double chi2 = 0.0;
        for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
        // 0.999 quantile of chi-square with 15 dof.
        CHECK(chi2 < 37.697);
    }
}
