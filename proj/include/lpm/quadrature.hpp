#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

#include "lpm/rng.hpp"

namespace lpm {

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    double radial_cutoff_sigmas = 12.0;
};

struct McSpec {
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
};

/// Raised when the subdivision budget is exhausted; carries the best
/// estimate so far and the bound on its error.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double estimate, double bound)
        : std::runtime_error(msg), best_estimate(estimate), error_bound(bound) {}

    double best_estimate;
    double error_bound;
};

/// Adaptive Gauss-Kronrod (G7-K15) integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

/// Surface area of the unit sphere in R^d: 2 pi^(d/2) / Gamma(d/2).
double unit_sphere_area(int d);

/// Integral of f(||z||) over R^d, reduced to
///   S_{d-1} * int_0^R f(r) r^(d-1) dr,  R = radial_cutoff_sigmas * sqrt(reference_variance).
double integrate_radial(const std::function<double(double)>& f, int d,
                        double reference_variance, const QuadratureSpec& spec = {});

/// Nested integral
///   S_{d-1} * int_0^R r^(d-1) [ int p_invgamma(u; shape, scale) f(r, u) du ] dr
/// with the inner (random-effect) dimension iterated first. The inner domain is
/// truncated at the inverse-gamma [tail_mass, 1 - tail_mass] quantiles.
double integrate_2d(const std::function<double(double, double)>& f, int d,
                    double reference_variance, double ig_shape, double ig_scale,
                    const QuadratureSpec& spec = {}, double tail_mass = 1e-8);

/// Integral of p_invgamma(u) * f(u) du over the truncated effect domain.
double integrate_invgamma(const std::function<double(double)>& f, double ig_shape,
                          double ig_scale, const QuadratureSpec& spec = {},
                          double tail_mass = 1e-8);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of f(sampler(rng)) over mc.samples draws.
/// Draw i uses a stream keyed by (mc.seed, i), so results are bit-identical
/// for identical inputs no matter how the loop is scheduled.
template <class Sampler, class F>
McResult mc_expectation(Sampler&& sampler, F&& f, const McSpec& mc) {
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < mc.samples; ++i) {
        CounterRng rng(mc.seed, 0x6d635f647261ULL, i);
        const double v = f(sampler(rng));
        sum += v;
        sumsq += v * v;
    }
    const double m = static_cast<double>(mc.samples);
    McResult out;
    out.estimate = sum / m;
    if (mc.samples > 1) {
        const double var = (sumsq - m * out.estimate * out.estimate) / (m - 1.0);
        out.std_error = var > 0.0 ? std::sqrt(var / m) : 0.0;
    }
    return out;
}

}  // namespace lpm
