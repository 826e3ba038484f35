#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "reldim/random.hpp"

namespace reldim {

using Point = std::vector<double>;

/// Uniform distribution on the ball of `radius` around `center`.
struct BallSpec {
    Point center;
    double radius = 1.0;

    static BallSpec unit(int dim);
    static BallSpec at(Point center, double radius = 1.0);

    int dim() const noexcept { return static_cast<int>(center.size()); }
    void validate() const;
};

/// Polynomial kernel (bias^2 + x.y)^deg on R^dim.
struct KernelSpec {
    int deg = 1;
    double bias = 1.0;
    int dim = 1;

    void validate() const;
    /// True when bias sits on the b = 1 boundary, where the feature-space
    /// mean formula is only just valid.
    bool bias_on_boundary() const noexcept { return bias == 1.0; }
};

/// Coordinates of phi(x) in R^N, N = C(dim + deg, deg).
using FeatureVector = std::vector<double>;

double dot(std::span<const double> x, std::span<const double> y);
double squared_norm(std::span<const double> x);

/// Draws one point from U(spec) into `out` (size spec.dim()).
///
/// Direction from a normalised Gaussian vector, radius r U^{1/d}.
void sample_uniform_ball(const BallSpec& spec, RandomStream& rng, std::span<double> out);
Point sample_uniform_ball(const BallSpec& spec, RandomStream& rng);

/// C(n + k, k), or SIZE_MAX when it does not fit.
std::size_t feature_dimension(int dim, int deg);

/// Explicit feature map of the polynomial kernel.
///
/// Coordinates are indexed by exponent tuples (j0, j1, ..., jd) with
/// j0 + ... + jd = deg, where j0 is the power of the bias. The coordinate for
/// j is sqrt(deg! / (j0! ... jd!)) b^{j0} x1^{j1} ... xd^{jd}. Tuples are
/// ordered lexicographically with larger exponents first, so the first
/// coordinate is always b^deg and, for deg = 1, phi(x) = (b, x1, ..., xd).
class PolynomialFeatureMap {
public:
    static constexpr std::size_t kDefaultMaxCoords = std::size_t{1} << 22;

    /// Throws std::length_error when N exceeds `max_coords`.
    explicit PolynomialFeatureMap(const KernelSpec& spec, std::size_t max_coords = kDefaultMaxCoords);

    std::size_t size() const noexcept { return coeffs_.size(); }
    const KernelSpec& spec() const noexcept { return spec_; }

    /// Exponents of coordinate i; entry 0 is the bias exponent.
    std::span<const int> exponents(std::size_t i) const;

    void apply(std::span<const double> x, std::span<double> out) const;
    FeatureVector operator()(std::span<const double> x) const;

private:
    KernelSpec spec_;
    std::vector<int> exps_;       // size() rows of (dim + 1) exponents
    std::vector<double> coeffs_;  // sqrt(multinomial) * b^{j0}
};

FeatureVector feature_map(std::span<const double> x, const KernelSpec& spec,
                          std::size_t max_coords = PolynomialFeatureMap::kDefaultMaxCoords);

/// (bias^2 + x.y)^deg.
double kernel(std::span<const double> x, std::span<const double> y, const KernelSpec& spec);

/// Point clouds as CSV: header `x0,...,x{d-1}`, one point per row.
void write_point_cloud(std::ostream& os, std::span<const Point> points);
std::vector<Point> read_point_cloud(std::istream& is);

}  // namespace reldim
