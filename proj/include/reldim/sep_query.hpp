#pragma once

#include <optional>
#include <span>
#include <variant>

#include "reldim/geometry.hpp"

namespace reldim {

/// U(base) pushed through the polynomial feature map of `kernel`.
struct FeaturePushforward {
    BallSpec base;
    KernelSpec kernel;
};

using Distribution = std::variant<BallSpec, FeaturePushforward>;

/// Dimension of the space the distribution's samples live in.
int ambient_dim(const Distribution& dist);

/// The pairwise separability event (x - y, y - centre) >= theta with
/// y ~ y_dist and x ~ x_dist.
///
/// With y_dist = D and x_dist = D' this is the probability that defines the
/// relative intrinsic dimension n(D, D'); y_dist = x_dist gives n(D).
struct SepQuery {
    Distribution y_dist;
    Distribution x_dist;
    Point centre;
    double theta = 0.0;

    static SepQuery self(const Distribution& dist, Point centre, double theta = 0.0);

    int dim() const { return static_cast<int>(centre.size()); }
    void validate() const;
};

/// Draws points from a Distribution into caller-owned buffers.
class PointSampler {
public:
    explicit PointSampler(const Distribution& dist);

    std::size_t dim() const noexcept { return out_dim_; }
    void draw(RandomStream& rng, std::span<double> out);

private:
    BallSpec base_;
    std::size_t out_dim_ = 0;
    std::optional<PolynomialFeatureMap> map_;
    Point scratch_;
};

}  // namespace reldim
