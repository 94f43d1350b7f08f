#pragma once

#include <cmath>
#include <cstdint>

namespace hlb {

/// Small deterministic generator (splitmix64). Streams depend only on the
/// seed, never on the platform or the standard library, so experiment
/// output is reproducible byte for byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    /// -1 or +1, equiprobable.
    int sign() { return (next() >> 63) ? 1 : -1; }

private:
    static constexpr double kPi = 3.141592653589793;
    std::uint64_t state_;
};

/// Decorrelated stream seed for (seed, index); used so that trials and
/// restarts draw independent randomness regardless of scheduling.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    g.next();
    return g.next();
}

}  // namespace hlb
