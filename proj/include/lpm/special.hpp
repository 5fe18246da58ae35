#pragma once

#include <span>

namespace lpm {

/// log C(n, k) via lgamma; n and k need not be small.
double log_binomial(double n, double k);

/// Regularized lower incomplete gamma P(a, x) and upper Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Inverse of P(a, .): smallest x with P(a, x) = p.
double gamma_p_inv(double a, double p);

// Inverse-gamma distribution with shape beta0, scale beta1:
// density beta1^beta0 / Gamma(beta0) * x^(-beta0-1) * exp(-beta1/x).
double invgamma_pdf(double x, double beta0, double beta1);
double invgamma_cdf(double x, double beta0, double beta1);
double invgamma_quantile(double q, double beta0, double beta1);

/// Fills out[k] = C(m, k) theta^k (1-theta)^(m-k) for k = 0..m.
/// Evaluated outward from the mode in linear space after one log-space
/// anchor, so it stays finite for m in the tens of thousands.
void binomial_pmf_row(int m, double theta, std::span<double> out);

/// Chi-square upper tail Pr(X > x) with df degrees of freedom.
double chi_square_sf(double x, double df);

}  // namespace lpm
