#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace lpm {

using Vec = std::vector<double>;

/// Isotropic Gaussian in R^d: covariance is variance * I_d.
struct IsotropicGaussian {
    Vec mean;
    double variance = 1.0;

    int dim() const { return static_cast<int>(mean.size()); }
};

/// One latent draw: a position in R^d plus, for random-effect models,
/// a per-node kernel bandwidth.
struct LatentPoint {
    Vec position;
    std::optional<double> random_effect;
};

// ---------------------------------------------------------------------------
// Model family
// ---------------------------------------------------------------------------

struct GaussianLpm {
    double tau = 1.0;    // edge probability at zero distance
    double phi = 1.0;    // kernel bandwidth (squared-distance units)
    double gamma = 1.0;  // latent prior variance
    int dim = 2;
};

struct MixtureComponent {
    double weight = 1.0;
    Vec mean;
    double gamma = 1.0;
};

struct GaussianLpcm {
    double tau = 1.0;
    double phi = 1.0;
    int dim = 2;
    std::vector<MixtureComponent> components;
};

struct GaussianLpmre {
    double tau = 1.0;
    double gamma = 1.0;
    int dim = 2;
    double beta0 = 3.0;  // inverse-gamma shape
    double beta1 = 1.0;  // inverse-gamma scale
};

struct LogisticLpm {
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 1.0;
    int dim = 2;
};

struct ErdosRenyi {
    double p = 0.5;
};

using ModelSpec =
    std::variant<GaussianLpm, GaussianLpcm, GaussianLpmre, LogisticLpm, ErdosRenyi>;

/// Latent dimension of the model; 0 for Erdos-Renyi (no latent space).
int latent_dimension(const ModelSpec& spec);

std::string model_name(const ModelSpec& spec);

/// Throws std::invalid_argument when a parameter is out of range
/// (nonpositive variances, probabilities outside [0,1], mixture weights
/// not summing to 1 within 1e-12, d < 1).
void validate(const ModelSpec& spec);

// ---------------------------------------------------------------------------
// Gaussian algebra
// ---------------------------------------------------------------------------

double squared_distance(std::span<const double> a, std::span<const double> b);

/// f_d(x; mu, variance) = (2*pi*variance)^(-d/2) exp(-||x-mu||^2 / (2*variance)).
double gaussian_density(std::span<const double> x, const IsotropicGaussian& g);

/// Same density evaluated from a precomputed squared distance ||x-mu||^2.
double gaussian_density_sq(double sq_dist, double variance, int d);
double log_gaussian_density_sq(double sq_dist, double variance, int d);

struct GaussianProduct {
    double scale = 0.0;
    IsotropicGaussian density;
};

/// Pointwise f(x;a) * f(x;b) = scale * f(x;result):
///   scale  = f_d(a.mean - b.mean; 0, a.var + b.var)
///   mean   = (b.var * a.mean + a.var * b.mean) / (a.var + b.var)
///   var    = a.var * b.var / (a.var + b.var)
GaussianProduct gaussian_product(const IsotropicGaussian& a, const IsotropicGaussian& b);

// ---------------------------------------------------------------------------
// Connection kernels
// ---------------------------------------------------------------------------

/// Gaussian kernel tau * exp(-sq_dist / (2*phi)).
double gaussian_kernel(double tau, double phi, double sq_dist);

/// Logistic kernel 1 / (1 + exp(-(alpha - beta*dist))).
double logistic_kernel(double alpha, double beta, double dist);

/// Pr(edge | latents) for any variant. For the LPMRE both random effects
/// must be present and the bandwidth is (phi_i + phi_j)^2.
double connection_probability(const ModelSpec& spec, const LatentPoint& i,
                              const LatentPoint& j);

// ---------------------------------------------------------------------------
// Inverse-gamma parameterization helpers (shape = beta0, scale = beta1)
// ---------------------------------------------------------------------------

/// Mean beta1 / (beta0 - 1); requires beta0 > 1.
double invgamma_mean(double beta0, double beta1);

/// Variance beta1^2 / ((beta0-1)^2 (beta0-2)); requires beta0 > 2.
/// Throws when the variance is not finite instead of silently assuming it.
double invgamma_variance(double beta0, double beta1);

/// Invert (mean, variance) -> (beta0, beta1); the result always has beta0 > 2.
std::pair<double, double> invgamma_from_mean_variance(double mean, double variance);

}  // namespace lpm
