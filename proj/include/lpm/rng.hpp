#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace lpm {

// Counter-based randomness: every stream is keyed by (seed, key...) through
// splitmix64 mixing, so draws for node i or pair (i,j) never depend on
// evaluation order or thread count.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_keys(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64(s);
    s ^= a + 0x9e3779b97f4a7c15ULL;
    h ^= splitmix64(s);
    s ^= b + 0xc2b2ae3d27d4eb4fULL;
    h ^= splitmix64(s);
    s ^= c + 0x165667b19e3779f9ULL;
    h ^= splitmix64(s);
    return h;
}

/// Deterministic per-key stream of doubles / normals / gammas.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                        std::uint64_t c = 0)
        : state_(mix_keys(seed, a, b, c)) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform on (0,1): 53 random bits, offset so 0 is excluded.
    double next_double() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the spare draw is cached.
    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = next_double();
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Gamma(shape, scale=1) via Marsaglia-Tsang; shape < 1 uses the
    /// boost U^(1/shape) augmentation.
    double next_gamma(double shape) {
        if (shape < 1.0) {
            const double u = next_double();
            return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = next_normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Inverse-gamma(shape, scale): scale / Gamma(shape, 1).
    double next_invgamma(double shape, double scale) {
        return scale / next_gamma(shape);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// One-shot uniform keyed by (seed, i, j); used for per-pair edge coins.
inline double pair_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    std::uint64_t s = mix_keys(seed, i, j, 0x70616972ULL);
    return (static_cast<double>(splitmix64(s) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace lpm
