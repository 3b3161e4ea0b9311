#pragma once

#include <cstdint>
#include <utility>

namespace qdm::rng {

// Stateless counter-based generator: three chained splitmix64
// finalizers over (seed, stream, counter). Every draw is addressed
// directly, so parallel loops reproduce the serial stream exactly.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t counter) {
    return splitmix64(seed ^ splitmix64(stream ^ splitmix64(counter)));
}

// Uniform double in [0, 1).
inline double uniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t counter) {
    return static_cast<double>(mix(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// Pair of independent standard normals (Box-Muller) at counters
// (2c, 2c+1) of the stream.
std::pair<double, double> gaussian_pair(std::uint64_t seed,
                                        std::uint64_t stream,
                                        std::uint64_t counter);

namespace detail {
inline double uniform_open(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
    // (0, 1]: safe as a log argument.
    return static_cast<double>((mix(seed, stream, counter) >> 11) + 1) *
           0x1.0p-53;
}
}  // namespace detail

}  // namespace qdm::rng
