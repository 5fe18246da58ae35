#include "lpm/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpm {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

int latent_dimension(const ModelSpec& spec) {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErdosRenyi>)
                return 0;
            else
                return m.dim;
        },
        spec);
}

std::string model_name(const ModelSpec& spec) {
    struct Visitor {
        std::string operator()(const GaussianLpm&) const { return "gaussian-lpm"; }
        std::string operator()(const GaussianLpcm&) const { return "lpcm"; }
        std::string operator()(const GaussianLpmre&) const { return "lpmre"; }
        std::string operator()(const LogisticLpm&) const { return "logistic-lpm"; }
        std::string operator()(const ErdosRenyi&) const { return "er"; }
    };
    return std::visit(Visitor{}, spec);
}

void validate(const ModelSpec& spec) {
    struct Visitor {
        void operator()(const GaussianLpm& m) const {
            require(m.tau >= 0.0 && m.tau <= 1.0, "gaussian-lpm: tau must lie in [0,1]");
            require(m.phi > 0.0, "gaussian-lpm: phi must be positive");
            require(m.gamma > 0.0, "gaussian-lpm: gamma must be positive");
            require(m.dim >= 1, "gaussian-lpm: d must be >= 1");
        }
        void operator()(const GaussianLpcm& m) const {
            require(m.tau >= 0.0 && m.tau <= 1.0, "lpcm: tau must lie in [0,1]");
            require(m.phi > 0.0, "lpcm: phi must be positive");
            require(m.dim >= 1, "lpcm: d must be >= 1");
            require(!m.components.empty(), "lpcm: at least one mixture component");
            double wsum = 0.0;
            for (const auto& c : m.components) {
                require(c.weight >= 0.0 && c.weight <= 1.0,
                        "lpcm: component weight must lie in [0,1]");
                require(c.gamma > 0.0, "lpcm: component gamma must be positive");
                require(static_cast<int>(c.mean.size()) == m.dim,
                        "lpcm: component mean dimension mismatch");
                wsum += c.weight;
            }
            require(std::abs(wsum - 1.0) <= 1e-12, "lpcm: mixture weights must sum to 1");
        }
        void operator()(const GaussianLpmre& m) const {
            require(m.tau >= 0.0 && m.tau <= 1.0, "lpmre: tau must lie in [0,1]");
            require(m.gamma > 0.0, "lpmre: gamma must be positive");
            require(m.beta0 > 0.0, "lpmre: beta0 must be positive");
            require(m.beta1 > 0.0, "lpmre: beta1 must be positive");
            require(m.dim >= 1, "lpmre: d must be >= 1");
        }
        void operator()(const LogisticLpm& m) const {
            require(m.beta > 0.0, "logistic-lpm: beta must be positive");
            require(m.gamma > 0.0, "logistic-lpm: gamma must be positive");
            require(m.dim >= 1, "logistic-lpm: d must be >= 1");
        }
        void operator()(const ErdosRenyi& m) const {
            require(m.p >= 0.0 && m.p <= 1.0, "er: p must lie in [0,1]");
        }
    };
    std::visit(Visitor{}, spec);
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("squared_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        s += diff * diff;
    }
    return s;
}

double gaussian_density_sq(double sq_dist, double variance, int d) {
    if (variance <= 0.0)
        throw std::invalid_argument("gaussian_density: variance must be positive");
    return std::exp(log_gaussian_density_sq(sq_dist, variance, d));
}

double log_gaussian_density_sq(double sq_dist, double variance, int d) {
    return -0.5 * d * std::log(2.0 * std::numbers::pi * variance) -
           sq_dist / (2.0 * variance);
}

double gaussian_density(std::span<const double> x, const IsotropicGaussian& g) {
    if (g.variance <= 0.0)
        throw std::invalid_argument("gaussian_density: variance must be positive");
    return gaussian_density_sq(squared_distance(x, g.mean), g.variance,
                               static_cast<int>(g.mean.size()));
}

GaussianProduct gaussian_product(const IsotropicGaussian& a, const IsotropicGaussian& b) {
    if (a.mean.size() != b.mean.size())
        throw std::invalid_argument("gaussian_product: dimension mismatch");
    const double s = a.variance + b.variance;
    GaussianProduct out;
    out.scale = gaussian_density_sq(squared_distance(a.mean, b.mean), s,
                                    static_cast<int>(a.mean.size()));
    out.density.variance = a.variance * b.variance / s;
    out.density.mean.resize(a.mean.size());
    for (std::size_t i = 0; i < a.mean.size(); ++i)
        out.density.mean[i] = (b.variance * a.mean[i] + a.variance * b.mean[i]) / s;
    return out;
}

double gaussian_kernel(double tau, double phi, double sq_dist) {
    return tau * std::exp(-sq_dist / (2.0 * phi));
}

double logistic_kernel(double alpha, double beta, double dist) {
    const double t = alpha - beta * dist;
    // guard against overflow in exp for very negative t
    if (t < -700.0) return 0.0;
    return 1.0 / (1.0 + std::exp(-t));
}

double connection_probability(const ModelSpec& spec, const LatentPoint& i,
                              const LatentPoint& j) {
    struct Visitor {
        const LatentPoint& i;
        const LatentPoint& j;

        double operator()(const GaussianLpm& m) const {
            return gaussian_kernel(m.tau, m.phi, squared_distance(i.position, j.position));
        }
        double operator()(const GaussianLpcm& m) const {
            // positions come from the mixture; the kernel is the shared-phi Gaussian
            return gaussian_kernel(m.tau, m.phi, squared_distance(i.position, j.position));
        }
        double operator()(const GaussianLpmre& m) const {
            if (!i.random_effect || !j.random_effect)
                throw std::invalid_argument(
                    "connection_probability: lpmre requires random effects on both nodes");
            const double s = *i.random_effect + *j.random_effect;
            return gaussian_kernel(m.tau, s * s, squared_distance(i.position, j.position));
        }
        double operator()(const LogisticLpm& m) const {
            return logistic_kernel(m.alpha, m.beta,
                                   std::sqrt(squared_distance(i.position, j.position)));
        }
        double operator()(const ErdosRenyi& m) const { return m.p; }
    };
    return std::visit(Visitor{i, j}, spec);
}

double invgamma_mean(double beta0, double beta1) {
    if (beta0 <= 1.0)
        throw std::invalid_argument("invgamma_mean: requires beta0 > 1");
    return beta1 / (beta0 - 1.0);
}

double invgamma_variance(double beta0, double beta1) {
    if (beta0 <= 2.0)
        throw std::invalid_argument(
            "invgamma_variance: random-effect variance is infinite unless beta0 > 2");
    const double m = beta0 - 1.0;
    return beta1 * beta1 / (m * m * (beta0 - 2.0));
}

std::pair<double, double> invgamma_from_mean_variance(double mean, double variance) {
    if (mean <= 0.0 || variance <= 0.0)
        throw std::invalid_argument("invgamma_from_mean_variance: mean and variance must be positive");
    const double beta0 = mean * mean / variance + 2.0;
    const double beta1 = mean * (beta0 - 1.0);
    return {beta0, beta1};
}

}  // namespace lpm
