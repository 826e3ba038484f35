#include "reldim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "reldim/specfun.hpp"

namespace reldim {

namespace {

void check_dim(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) throw std::domain_error("dimension must be a positive real");
}

QuadResult exact(double v) {
    return QuadResult{v, 0.0, 0, true};
}

}  // namespace

SepGeometry SepGeometry::at(double theta, double t) {
    if (!(t > 0.0)) throw std::domain_error("SepGeometry: t must be > 0");
    SepGeometry g;
    g.theta = theta;
    g.t = t;
    g.R = std::sqrt(std::max(0.25 * t * t - theta, 0.0));
    g.a = (1.0 - g.R * g.R) / t - 0.25 * t;
    g.b_len = 1.0 - g.a - 0.5 * t;
    return g;
}

QuadSpec default_f_theta_spec() {
    return QuadSpec{1e-12, 1e-11, 4096};
}

double conditional_sep_prob(double theta, double d, double t) {
    check_dim(d);
    if (t <= 0.0) {
        const double r0 = std::sqrt(std::max(-theta, 0.0));
        if (r0 == 0.0) return 0.0;
        return r0 >= 1.0 ? 1.0 : std::exp(d * std::log(r0));
    }
    const SepGeometry g = SepGeometry::at(theta, t);
    double v = cap_volume_fraction(d, 1.0, g.b_len);
    if (g.R > 0.0) {
        const double small = cap_volume_fraction(d, g.R, g.R + g.a);
        if (small > 0.0) v += std::exp(d * std::log(g.R)) * small;
    }
    return std::clamp(v, 0.0, 1.0);
}

QuadResult f_theta_two_cap(double theta, double d, const QuadSpec& spec) {
    check_dim(d);
    // Radii at which the spheres start or stop intersecting, or the small
    // ball appears.
    std::vector<double> breaks;
    for (double t : {1.0 + theta, -1.0 - theta, theta > 0.0 ? 2.0 * std::sqrt(theta) : -1.0}) {
        if (t > 0.0 && t < 1.0) breaks.push_back(std::pow(t, d));
    }
    const double inv_d = 1.0 / d;
    auto integrand = [&](double u) { return conditional_sep_prob(theta, d, std::pow(u, inv_d)); };
    return integrate_1d(integrand, 0.0, 1.0, spec, breaks);
}

QuadResult f_theta_reduced(double theta, double d, const QuadSpec& spec) {
    check_dim(d);
    if (!(theta >= 0.0)) throw std::domain_error("f_theta_reduced: requires theta >= 0");
    const double t0 = 2.0 * std::sqrt(theta);
    if (t0 >= 1.0) return exact(0.0);
    const double inv_d = 1.0 / d;
    auto integrand = [&](double u) {
        const double t = std::pow(u, inv_d);
        const double r2 = 0.25 * t * t - theta;
        return r2 > 0.0 ? std::exp(0.5 * d * std::log(r2)) : 0.0;
    };
    return integrate_1d(integrand, std::pow(t0, d), 1.0, spec);
}

QuadResult f_theta(double theta, double d, const QuadSpec& spec) {
    check_dim(d);
    if (!std::isfinite(theta)) throw std::domain_error("f_theta: theta must be finite");
    if (theta <= -2.0) return exact(1.0);
    if (theta == 0.0) return exact(std::exp2(-(d + 1.0)));
    if (theta >= 0.25) return exact(0.0);
    if (theta > 0.0) return f_theta_reduced(theta, d, spec);
    return f_theta_two_cap(theta, d, spec);
}

DimensionValue intrinsic_dim_from_prob(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("intrinsic_dim_from_prob: p must be in [0, 1]");
    if (p == 0.0) return {std::numeric_limits<double>::infinity(), DimensionSource::analytic};
    return {-std::log2(p) - 1.0, DimensionSource::analytic};
}

double invert_f(double theta, double p, double d_lo, double d_hi, const QuadSpec& spec) {
    if (!(theta >= -1.0 && theta <= 0.0)) {
        throw std::domain_error("invert_f: f_theta is only invertible in d for theta in [-1, 0]");
    }
    if (!(d_lo > 0.0) || !(d_hi > d_lo)) throw std::invalid_argument("invert_f: need 0 < d_lo < d_hi");
    auto f = [&](double d) {
        const QuadResult r = f_theta(theta, d, spec);
        if (!r.converged) throw ConvergenceError("invert_f: f_theta quadrature did not converge");
        return r.value - p;
    };
    double lo = d_lo;
    double hi = d_hi;
    const double g_lo = f(lo);
    const double g_hi = f(hi);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        throw std::invalid_argument("invert_f: p = " + std::to_string(p) +
                                    " is not enclosed by f_theta on [" + std::to_string(d_lo) + ", " +
                                    std::to_string(d_hi) + "]");
    }
    const bool lo_positive = g_lo > 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(1.0, mid)) break;
        const double g = f(mid);
        if (g == 0.0) return mid;
        if ((g > 0.0) == lo_positive) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double two_ball_accuracy(double d, double eps) {
    check_dim(d);
    if (!(eps >= 0.0)) throw std::domain_error("two_ball_accuracy: eps must be >= 0");
    if (eps >= 2.0) return 1.0;
    return 1.0 - cap_volume_fraction(d, 1.0, 1.0 - 0.5 * eps);
}

SepQuery two_ball_relative_dim_query(int d, double eps, RelativeDim which) {
    if (d < 1) throw std::domain_error("two_ball_relative_dim_query: d must be >= 1");
    if (!(eps >= 0.0) || !std::isfinite(eps)) {
        throw std::domain_error("two_ball_relative_dim_query: eps must be finite and >= 0");
    }
    Point c1(static_cast<std::size_t>(d), 0.0);
    Point c2 = c1;
    c2[0] = eps;
    const BallSpec x_ball{c1, 1.0};
    const BallSpec y_ball{c2, 1.0};
    SepQuery q = which == RelativeDim::y_to_x ? SepQuery{y_ball, x_ball, c1, 0.0}
                                              : SepQuery{x_ball, y_ball, c1, 0.0};
    q.validate();
    return q;
}

}  // namespace reldim
