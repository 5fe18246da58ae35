#include "lpm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lpm/special.hpp"

namespace lpm {

namespace {

// 15-point Kronrod nodes on [0,1] (symmetric) with Kronrod weights; the
// embedded 7-point Gauss rule uses the odd-indexed nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(mid);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += kWgk[i] * fsum;
        if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    double err = std::abs(k15 - g7) * 200.0;
    err *= std::sqrt(err);
    return {a, b, k15, err};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureSpec& spec) {
    if (a == b) return 0.0;
    std::vector<Panel> panels{gk15(f, a, b)};
    int splits = 0;
    for (;;) {
        double total = 0.0, err = 0.0;
        for (const auto& p : panels) {
            total += p.value;
            err += p.error;
        }
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) return total;
        // split the panel with the largest error estimate
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].error > panels[worst].error) worst = i;
        const Panel w = panels[worst];
        if (splits >= spec.max_subdivisions)
            throw QuadratureError("quadrature: subdivision budget exhausted", total, err);
        const double m = 0.5 * (w.a + w.b);
        if (!(m > w.a && m < w.b)) {
            // interval at floating-point resolution; accept its estimate
            panels[worst].error = 0.0;
            continue;
        }
        panels[worst] = gk15(f, w.a, m);
        panels.push_back(gk15(f, m, w.b));
        ++splits;
    }
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
    return adaptive(f, a, b, spec);
}

double unit_sphere_area(int d) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double integrate_radial(const std::function<double(double)>& f, int d,
                        double reference_variance, const QuadratureSpec& spec) {
    if (d < 1) throw std::invalid_argument("integrate_radial: d must be >= 1");
    if (reference_variance <= 0.0)
        throw std::invalid_argument("integrate_radial: reference variance must be positive");
    const double R = spec.radial_cutoff_sigmas * std::sqrt(reference_variance);
    auto g = [&](double r) { return f(r) * std::pow(r, d - 1); };
    return unit_sphere_area(d) * adaptive(g, 0.0, R, spec);
}

double integrate_invgamma(const std::function<double(double)>& f, double ig_shape,
                          double ig_scale, const QuadratureSpec& spec, double tail_mass) {
    const double lo = invgamma_quantile(std::min(tail_mass, 1e-12), ig_shape, ig_scale);
    const double hi = invgamma_quantile(1.0 - tail_mass, ig_shape, ig_scale);
    auto g = [&](double u) { return invgamma_pdf(u, ig_shape, ig_scale) * f(u); };
    // seed panels at quantiles so the density spike is found immediately
    static constexpr double kSplit[] = {0.05, 0.25, 0.5, 0.75, 0.95};
    double total = 0.0;
    double prev = lo;
    for (double q : kSplit) {
        const double next = invgamma_quantile(q, ig_shape, ig_scale);
        if (next > prev && next < hi) {
            total += adaptive(g, prev, next, spec);
            prev = next;
        }
    }
    total += adaptive(g, prev, hi, spec);
    return total;
}

double integrate_2d(const std::function<double(double, double)>& f, int d,
                    double reference_variance, double ig_shape, double ig_scale,
                    const QuadratureSpec& spec, double tail_mass) {
    auto outer = [&](double r) {
        return integrate_invgamma([&](double u) { return f(r, u); }, ig_shape, ig_scale,
                                  spec, tail_mass);
    };
    return integrate_radial(outer, d, reference_variance, spec);
}

}  // namespace lpm
