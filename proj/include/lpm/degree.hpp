#pragma once

#include <span>
#include <vector>

#include "lpm/model.hpp"
#include "lpm/quadrature.hpp"

namespace lpm {

struct DegreeDistribution {
    int n = 0;
    std::vector<double> p;  // p[k] = Pr(degree = k), k = 0..n-1
    double mean = 0.0;
    double variance = 0.0;
    double dispersion = 0.0;
    double skewness = 0.0;
};

/// Factorial moments c_r = E[D (D-1) ... (D-r+1)], r = 1..order.
struct FactorialMoments {
    std::vector<double> values;

    double c(int r) const { return values.at(static_cast<std::size_t>(r) - 1); }
    int order() const { return static_cast<int>(values.size()); }
};

// ---------------------------------------------------------------------------
// theta: probability that a random node neighbours a node at position z
// ---------------------------------------------------------------------------

/// Gaussian LPM closed form tau (phi/(gamma+phi))^(d/2) exp(-||z||^2/(2(gamma+phi))).
double theta(const GaussianLpm& m, double z_sq_norm);

/// Gaussian LPCM closed form tau (2 pi phi)^(d/2) sum_g pi_g f_d(z; mu_g, gamma_g+phi).
double theta(const GaussianLpcm& m, std::span<const double> z);

/// Gaussian LPMRE: analytic inner position integral, numeric effect integral.
double theta(const GaussianLpmre& m, double z_sq_norm, double phi_s,
             const QuadratureSpec& spec = {});

/// Dispatcher; throws for variants without a latent-position theta.
double theta(const ModelSpec& spec, const LatentPoint& point,
             const QuadratureSpec& qspec = {});

// ---------------------------------------------------------------------------
// Degree analytics
// ---------------------------------------------------------------------------

FactorialMoments factorial_moments(const ModelSpec& spec, int n, int max_order,
                                   const QuadratureSpec& qspec = {});

double mean_degree(const ModelSpec& spec, int n, const QuadratureSpec& qspec = {});

DegreeDistribution degree_pmf(const ModelSpec& spec, int n,
                              const QuadratureSpec& qspec = {});

/// Fast fixed-grid variant for the LPMRE; used by the experimental tail fit
/// where thousands of pmf evaluations are needed.
DegreeDistribution degree_pmf_grid(const GaussianLpmre& m, int n,
                                   const QuadratureSpec& qspec = {});

/// Exact dispersion index of the Gaussian LPM degree distribution.
double dispersion_index(const GaussianLpm& m, int n);

/// Skewness from the first three factorial moments; throws on zero variance.
double skewness(const ModelSpec& spec, int n, const QuadratureSpec& qspec = {});
double skewness_from_factorial_moments(double c1, double c2, double c3);

/// Average nearest-neighbour degree of a node at squared radius ||z||^2.
double annd_of_position(const GaussianLpm& m, int n, double z_sq_norm);

/// Average nearest-neighbour degree of a node of degree k; throws
/// "degree unreachable" when p_k underflows.
double annd_of_degree(const GaussianLpm& m, int n, int k,
                      const QuadratureSpec& qspec = {});

/// PGF G(x) of the degree of a random node, x in [0,1].
double pgf_eval(const ModelSpec& spec, int n, double x,
                const QuadratureSpec& qspec = {});

}  // namespace lpm
