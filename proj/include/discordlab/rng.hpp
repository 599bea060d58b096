#pragma once

#include <cmath>
#include <cstdint>

namespace discordlab {

/// Counter-based random generator: every draw is a pure function of
/// (seed, counter), so parallel consumers index disjoint counter ranges and
/// results are reproducible bit-for-bit regardless of evaluation order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(seed_ + 0x9e3779b97f4a7c15ULL * (counter + 1));
    }

    /// Uniform in [0, 1).
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
    double gaussian(std::uint64_t counter) const {
        const double u1 = std::max(uniform(2 * counter), 0x1.0p-53);
        const double u2 = uniform(2 * counter + 1);
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

} // namespace discordlab
