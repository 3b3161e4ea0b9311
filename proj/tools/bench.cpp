// Compares the OpenMP kernels against their serial reference paths.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdm/coherence.hpp"
#include "qdm/discord.hpp"
#include "qdm/dqc1.hpp"
#include "qdm/states.hpp"

using namespace qdm;

namespace {

double time_of(const std::function<void()>& f, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        best = std::min(best, dt);
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel paths run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    {
        const DensityMatrix rho = werner(0.7);
        const Bipartition cut({0}, 2);
        row("discord grid scan 128x256",
            time_of([&] { scan_basis_grid_serial(rho, cut, 128, 256); }),
            time_of([&] { scan_basis_grid(rho, cut, 128, 256); }));
    }
    {
        row("mq signal n=7, 128 phases",
            time_of([&] { mq_signal_serial(7, 1e-5, 128); }),
            time_of([&] { mq_signal(7, 1e-5, 128); }));
    }
    {
        const Operator u = random_unitary(16, 41);
        // dqc1_sampled parallelizes over shots internally; the serial
        // baseline is a single-thread run of the same loop.
        const long long shots = 20'000'000;
        double serial_t;
#ifdef _OPENMP
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        serial_t = time_of([&] { dqc1_sampled(u, 1.0, shots, 5); });
        omp_set_num_threads(saved);
#else
        serial_t = time_of([&] { dqc1_sampled(u, 1.0, shots, 5); });
#endif
        row("dqc1 sampling 2e7 shots", serial_t,
            time_of([&] { dqc1_sampled(u, 1.0, shots, 5); }));
    }
    return 0;
}
