#include "reldim/sep_query.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace reldim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

int ambient_dim(const Distribution& dist) {
    return std::visit(overloaded{
                          [](const BallSpec& b) { return b.dim(); },
                          [](const FeaturePushforward& f) {
                              const std::size_t n = feature_dimension(f.kernel.dim, f.kernel.deg);
                              return static_cast<int>(n);
                          },
                      },
                      dist);
}

SepQuery SepQuery::self(const Distribution& dist, Point centre, double theta) {
    SepQuery q{dist, dist, std::move(centre), theta};
    q.validate();
    return q;
}

void SepQuery::validate() const {
    auto check = [](const Distribution& d, const char* role) {
        std::visit(overloaded{
                       [](const BallSpec& b) { b.validate(); },
                       [role](const FeaturePushforward& f) {
                           f.base.validate();
                           f.kernel.validate();
                           if (f.kernel.dim != f.base.dim()) {
                               throw std::invalid_argument(std::string(role) +
                                                           ": kernel dim differs from base ball dim");
                           }
                       },
                   },
                   d);
    };
    check(y_dist, "y distribution");
    check(x_dist, "x distribution");
    const int n = ambient_dim(y_dist);
    if (ambient_dim(x_dist) != n || static_cast<int>(centre.size()) != n) {
        throw std::invalid_argument("SepQuery: distributions and centre must share one ambient dimension");
    }
    if (!std::isfinite(theta)) throw std::invalid_argument("SepQuery: theta must be finite");
}

PointSampler::PointSampler(const Distribution& dist) {
    std::visit(overloaded{
                   [this](const BallSpec& b) {
                       base_ = b;
                       out_dim_ = static_cast<std::size_t>(b.dim());
                   },
                   [this](const FeaturePushforward& f) {
                       base_ = f.base;
                       map_.emplace(f.kernel);
                       out_dim_ = map_->size();
                       scratch_.resize(static_cast<std::size_t>(f.base.dim()));
                   },
               },
               dist);
}

void PointSampler::draw(RandomStream& rng, std::span<double> out) {
    if (!map_) {
        sample_uniform_ball(base_, rng, out);
        return;
    }
    sample_uniform_ball(base_, rng, scratch_);
    map_->apply(scratch_, out);
}

}  // namespace reldim
