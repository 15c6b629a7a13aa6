#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rkhs {

/// Deterministic random source. mt19937_64 has a standardized sequence and
/// the derived draws below avoid std::*_distribution, whose output is
/// implementation-defined; identical seeds therefore give identical draws on
/// every platform, which the CLI's byte-determinism contract relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0,1) with 53 random bits.
    double uniform() { return std::ldexp(static_cast<double>(gen_() >> 11), -53); }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform index in [0,n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

    /// Standard normal via Box-Muller on the portable uniform.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace rkhs
