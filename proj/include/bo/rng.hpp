#ifndef BO_RNG_HPP
#define BO_RNG_HPP

#include <cmath>
#include <cstdint>

namespace bo {

// Deterministic counter-based randomness. Streams are derived by hashing
// (seed, index) so draws are reproducible independently of scheduling, and
// the normal variates do not depend on the standard library's
// implementation-defined normal_distribution.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64(splitmix64(seed) ^ (0x2545f4914f6cdd1dULL * (stream + 1)))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal pair (Box-Muller).
    void next_normal_pair(double& a, double& b) {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        a = r * std::cos(t);
        b = r * std::sin(t);
    }

    double next_normal() {
        double a, b;
        next_normal_pair(a, b);
        return a;
    }

private:
    std::uint64_t state_;
};

}  // namespace bo

#endif
