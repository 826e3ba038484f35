#pragma once

// Special functions and spherical geometry used by the analytic separability
// formulas. Every ratio of volumes is formed in log space, since
// Gamma(d/2 + 1) overflows long before the ratios do.

namespace reldim {

/// A spherical cap of height `height` cut from a `dim`-ball of radius `radius`.
struct CapGeometry {
    double dim = 1.0;
    double radius = 1.0;
    double height = 0.0;

    void validate() const;
};

/// ln Gamma(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma(double x);

/// ln B(a, b).
double log_beta(double a, double b);

/// Regularised incomplete beta function I_x(a, b).
///
/// Evaluated with the modified Lentz continued fraction, switching to
/// 1 - I_{1-x}(b, a) when x > (a + 1) / (a + b + 2) so the fraction always
/// converges quickly.
double reg_inc_beta(double x, double a, double b);

/// Same as reg_inc_beta, with ln B(a, b) supplied by the caller. Used in hot
/// loops where (a, b) are fixed.
double reg_inc_beta(double x, double a, double b, double log_beta_ab);

/// I_x(a, b) with y = 1 - x passed separately, for callers that know 1 - x to
/// full relative precision when x is close to 1. No argument checking.
double reg_inc_beta(double x, double y, double a, double b, double log_beta_ab);

/// Inverse of x -> I_x(a, b): the x in [0, 1] with I_x(a, b) = p.
double inv_reg_inc_beta(double p, double a, double b);

/// ln of the volume of the d-ball of radius r. d may be any positive real.
double log_ball_volume(double d, double r);

/// Volume pi^{d/2} r^d / Gamma(d/2 + 1).
double ball_volume(double d, double r);

/// Surface area d pi^{d/2} r^{d-1} / Gamma(d/2 + 1).
double ball_area(double d, double r);

/// Fraction of the volume of a d-ball of radius r lying in the cap of height h.
/// Defined for every real h: 0 below the ball, 1 once the cap covers it.
double cap_volume_fraction(double d, double r, double h);
double cap_volume_fraction(const CapGeometry& cap);

/// Fraction of the unit sphere in R^d whose cosine with a fixed axis is at
/// least `alpha`. For d = 1 the sphere is {-1, +1} and the value is 1/2 on the
/// half-open interval (-1, 1].
double cap_area_fraction(int d, double alpha);

/// cap_area_fraction with the beta normalisation cached; the polynomial
/// feature-space integrand calls this millions of times for one d.
class CapAreaFraction {
public:
    explicit CapAreaFraction(int d);

    double operator()(double alpha) const;
    int dim() const noexcept { return d_; }

private:
    double upper_cap(double alpha) const;

    int d_;
    double a_;
    double log_beta_;
};

/// 2F1((1 - deg)/2, -deg/2; d/2 + 1; x), summed exactly: one upper parameter
/// is a non-positive integer, so the series terminates after at most
/// floor(deg/2) + 1 terms.
double hyp2f1_degree(int deg, int d, double x);

}  // namespace reldim
