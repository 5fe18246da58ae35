#include "lpm/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpm {

double log_binomial(double n, double k) {
    if (k < 0.0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

namespace {

// Series representation of P(a,x), good for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p: series failed to converge");
}

// Continued fraction for Q(a,x), good for x >= a+1 (Lentz's method).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q: continued fraction failed to converge");
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("gamma_p: a must be positive");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("gamma_q: a must be positive");
    if (x <= 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double gamma_p_inv(double a, double p) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) throw std::invalid_argument("gamma_p_inv: p must lie in [0,1)");
    // bracket, then bisection polished by Newton steps
    double lo = 0.0, hi = a + 1.0;
    while (gamma_p(a, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw std::runtime_error("gamma_p_inv: bracket failed");
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 200; ++i) {
        const double f = gamma_p(a, x) - p;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        // Newton step using the gamma density; fall back to bisection if it
        // leaves the bracket
        const double logpdf = (a - 1.0) * std::log(x) - x - std::lgamma(a);
        double step = f / std::exp(logpdf);
        double xn = x - step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) <= 1e-15 * (std::abs(x) + 1e-300)) return xn;
        x = xn;
    }
    return x;
}

double invgamma_pdf(double x, double beta0, double beta1) {
    if (x <= 0.0) return 0.0;
    return std::exp(beta0 * std::log(beta1) - std::lgamma(beta0) -
                    (beta0 + 1.0) * std::log(x) - beta1 / x);
}

double invgamma_cdf(double x, double beta0, double beta1) {
    if (x <= 0.0) return 0.0;
    return gamma_q(beta0, beta1 / x);
}

double invgamma_quantile(double q, double beta0, double beta1) {
    if (q <= 0.0) return 0.0;
    if (q >= 1.0) throw std::invalid_argument("invgamma_quantile: q must lie in [0,1)");
    // Pr(X <= x) = Q(beta0, beta1/x)  =>  beta1/x = P^{-1}(beta0, 1-q)
    return beta1 / gamma_p_inv(beta0, 1.0 - q);
}

void binomial_pmf_row(int m, double theta, std::span<double> out) {
    if (static_cast<int>(out.size()) != m + 1)
        throw std::invalid_argument("binomial_pmf_row: output size must be m+1");
    if (theta <= 0.0) {
        for (auto& v : out) v = 0.0;
        out[0] = 1.0;
        return;
    }
    if (theta >= 1.0) {
        for (auto& v : out) v = 0.0;
        out[m] = 1.0;
        return;
    }
    const int mode = std::min(m, static_cast<int>((m + 1) * theta));
    const double logp = std::log(theta), logq = std::log1p(-theta);
    out[mode] = std::exp(log_binomial(m, mode) + mode * logp + (m - mode) * logq);
    const double odds = theta / (1.0 - theta);
    for (int k = mode + 1; k <= m; ++k)
        out[k] = out[k - 1] * odds * static_cast<double>(m - k + 1) / k;
    for (int k = mode - 1; k >= 0; --k)
        out[k] = out[k + 1] / odds * static_cast<double>(k + 1) / (m - k);
}

double chi_square_sf(double x, double df) { return gamma_q(0.5 * df, 0.5 * x); }

}  // namespace lpm
