#pragma once

#include <limits>

#include "reldim/quadrature.hpp"
#include "reldim/sep_query.hpp"

namespace reldim {

/// Lengths describing the intersection of the unit ball with the ball of
/// radius R around y/2, for |y| = t. The radical plane of the two spheres sits
/// at distance `a` beyond y/2 and leaves a cap of height `b_len` on the unit
/// ball.
struct SepGeometry {
    double theta = 0.0;
    double t = 0.0;
    double R = 0.0;
    double a = 0.0;
    double b_len = 0.0;

    /// Requires t > 0.
    static SepGeometry at(double theta, double t);
};

enum class DimensionSource { analytic, inverted, estimated };

/// An intrinsic dimension on the extended real line; +inf is a legitimate
/// value (certain separation).
struct DimensionValue {
    double value = 0.0;
    DimensionSource source = DimensionSource::analytic;

    bool is_infinite() const noexcept { return value == std::numeric_limits<double>::infinity(); }
};

/// Quadrature settings used by f_theta unless the caller supplies its own.
QuadSpec default_f_theta_spec();

/// P(x | (y - x, x) >= theta, |y| = t) for x uniform on the unit d-ball:
/// the volume fraction of the unit ball inside the ball of radius R_theta(t)
/// around y/2, as two spherical caps. At t = 0 the balls are concentric.
double conditional_sep_prob(double theta, double d, double t);

/// Probability that two independent uniform points of the unit d-ball satisfy
/// (y - x, x) >= theta. Uses the closed forms for theta <= -2, theta = 0 and
/// theta >= 1/4, the single radial integral for 0 < theta < 1/4, and the
/// two-cap integral otherwise. d may be any positive real.
QuadResult f_theta(double theta, double d, const QuadSpec& spec = default_f_theta_spec());

/// The two-cap radial integral, for any theta. Integrated in u = t^d so the
/// radial density becomes uniform; kinks of the integrand are passed to the
/// quadrature as breakpoints.
QuadResult f_theta_two_cap(double theta, double d, const QuadSpec& spec = default_f_theta_spec());

/// Integral of d t^{d-1} max(t^2/4 - theta, 0)^{d/2} over [0, 1]; valid for
/// theta >= 0, where the small ball never leaves the unit ball.
QuadResult f_theta_reduced(double theta, double d, const QuadSpec& spec = default_f_theta_spec());

/// n with p = 2^{-(n+1)}: 0 maps to +inf and 1 to -1.
DimensionValue intrinsic_dim_from_prob(double p);

/// Solves f_theta(d) = p for real d in [d_lo, d_hi] by bisection.
///
/// Only defined for theta in [-1, 0] (std::domain_error otherwise); p must be
/// enclosed by f_theta at the bracket ends (std::invalid_argument otherwise).
double invert_f(double theta, double p, double d_lo, double d_hi,
                const QuadSpec& spec = default_f_theta_spec());

/// Balanced accuracy of the mid-plane classifier for unit balls whose centres
/// are eps apart.
double two_ball_accuracy(double d, double eps);

enum class RelativeDim { y_to_x, x_to_y };  // n(Y, X) and n(X, Y)

/// X = U(B_d(1, c1)) with c1 = 0, Y = U(B_d(1, c2)) with c2 = eps e_1, centre c1.
///
/// y_to_x draws y ~ Y and x ~ X (defines n(Y, X)); x_to_y draws y ~ X and
/// x ~ Y (defines n(X, Y)).
SepQuery two_ball_relative_dim_query(int d, double eps, RelativeDim which);

}  // namespace reldim
