#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reldim/geometry.hpp"
#include "reldim/sep_query.hpp"

using namespace reldim;

namespace {

std::vector<Point> draw(const BallSpec& spec, int n, std::uint64_t seed) {
    RandomStream rng(seed, 0);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(sample_uniform_ball(spec, rng));
    return out;
}

double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

}  // namespace

TEST(BallSpec, Validation) {
    EXPECT_THROW(BallSpec::unit(0), std::invalid_argument);
    EXPECT_THROW(BallSpec::at({0.0, 0.0}, 0.0), std::invalid_argument);
    EXPECT_THROW(BallSpec::at({}, 1.0), std::invalid_argument);
    EXPECT_EQ(BallSpec::unit(4).dim(), 4);
}

TEST(Sampler, StaysInsideBall) {
    const BallSpec spec = BallSpec::at({1.0, -2.0, 0.5, 3.0}, 0.7);
    for (const Point& p : draw(spec, 20000, 5)) EXPECT_LE(dist(p, spec.center), spec.radius * (1 + 1e-15));
}

TEST(Sampler, MeanAndVarianceOfCoordinates) {
    // Each coordinate of U(B_d) has mean 0 and variance 1/(d + 2).
    const int d = 3;
    const int n = 1000000;
    const auto pts = draw(BallSpec::unit(d), n, 11);
    const double sigma = std::sqrt(1.0 / (d + 2) / n);
    for (int j = 0; j < d; ++j) {
        double m = 0.0;
        double v = 0.0;
        for (const auto& p : pts) {
            m += p[j];
            v += p[j] * p[j];
        }
        m /= n;
        v /= n;
        EXPECT_LT(std::fabs(m), 4.0 * sigma) << j;
        EXPECT_NEAR(v, 1.0 / (d + 2), 0.002) << j;
    }
}

TEST(Sampler, OneDimensionIsUniformOnInterval) {
    const int n = 200000;
    auto pts = draw(BallSpec::unit(1), n, 3);
    std::vector<double> x;
    for (const auto& p : pts) x.push_back(p[0]);
    std::sort(x.begin(), x.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
        const double cdf = 0.5 * (x[i] + 1.0);
        ks = std::max({ks, std::fabs(cdf - static_cast<double>(i) / n), std::fabs(cdf - (i + 1.0) / n)});
    }
    // 99.9% critical value of the Kolmogorov distribution.
    EXPECT_LT(ks, 1.9495 / std::sqrt(static_cast<double>(n)));
}

TEST(Sampler, RadialLaw) {
    const int n = 1000000;
    for (int d : {2, 5}) {
        const BallSpec spec = BallSpec::at(Point(static_cast<std::size_t>(d), 0.25), 2.0);
        const auto pts = draw(spec, n, 17 + d);
        for (double rho : {0.25, 0.5, 0.9}) {
            const auto inside = std::count_if(pts.begin(), pts.end(), [&](const Point& p) {
                return dist(p, spec.center) <= rho * spec.radius;
            });
            const double expect = std::pow(rho, d);
            EXPECT_NEAR(static_cast<double>(inside) / n, expect, 4.0 * oracle::binom_se(expect, n))
                << "d=" << d << " rho=" << rho;
        }
    }
}

TEST(Sampler, SameStreamSameDraws) {
    const BallSpec spec = BallSpec::unit(6);
    EXPECT_EQ(draw(spec, 100, 42), draw(spec, 100, 42));
    EXPECT_NE(draw(spec, 100, 42), draw(spec, 100, 43));
    RandomStream a(42, 0);
    RandomStream b(42, 1);
    EXPECT_NE(a.uniform(), b.uniform());
}

TEST(FeatureMap, Dimension) {
    EXPECT_EQ(feature_dimension(2, 2), 6u);
    EXPECT_EQ(feature_dimension(5, 3), 56u);
    EXPECT_EQ(feature_dimension(4, 0), 1u);
    EXPECT_EQ(feature_dimension(1000, 1000), SIZE_MAX);
    for (int d = 1; d <= 5; ++d) {
        for (int k = 0; k <= 4; ++k) {
            const PolynomialFeatureMap map(KernelSpec{k, 1.5, d});
            EXPECT_EQ(map.size(), feature_dimension(d, k));
        }
    }
}

TEST(FeatureMap, DegreeOneIsBiasThenCoordinates) {
    const KernelSpec spec{1, 2.5, 3};
    const Point x{0.1, -0.2, 0.3};
    const FeatureVector phi = feature_map(x, spec);
    ASSERT_EQ(phi.size(), 4u);
    EXPECT_DOUBLE_EQ(phi[0], 2.5);
    for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(phi[i + 1], x[i]);
}

TEST(FeatureMap, ExponentOrderIsLexicographicDescending) {
    const PolynomialFeatureMap map(KernelSpec{2, 1.0, 2});
    const std::vector<std::vector<int>> expect{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    ASSERT_EQ(map.size(), expect.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
        const auto e = map.exponents(i);
        EXPECT_EQ(std::vector<int>(e.begin(), e.end()), expect[i]) << i;
    }
}

TEST(FeatureMap, OriginKeepsOnlyBiasTerm) {
    for (int k = 0; k <= 5; ++k) {
        const KernelSpec spec{k, 1.5, 3};
        const FeatureVector phi = feature_map(Point(3, 0.0), spec);
        EXPECT_NEAR(dot(phi, phi), std::pow(1.5, 2 * k), 1e-12);
    }
}

TEST(FeatureMap, KernelIdentity) {
    std::mt19937_64 rng(99);
    int pairs = 0;
    for (double b : {1.0, 1.5, 3.0}) {
        for (int d = 1; d <= 5; ++d) {
            for (int k = 0; k <= 4; ++k) {
                const KernelSpec spec{k, b, d};
                const PolynomialFeatureMap map(spec);
                for (int i = 0; i < 14; ++i) {
                    const Point x = oracle::ball_point(d, rng);
                    const Point y = oracle::ball_point(d, rng);
                    const double kxy = kernel(x, y, spec);
                    EXPECT_LE(std::fabs(dot(map(x), map(y)) - kxy), 1e-9 * std::fabs(kxy));
                    ++pairs;
                }
            }
        }
    }
    EXPECT_GE(pairs, 1000);
}

TEST(FeatureMap, SizeCap) {
    EXPECT_THROW(PolynomialFeatureMap(KernelSpec{10, 1.0, 20}, 1000), std::length_error);
    EXPECT_THROW(feature_map(Point{1.0}, KernelSpec{2, 1.0, 2}), std::invalid_argument);
}

TEST(Kernel, BasicValues) {
    const Point x{0.6, 0.8};
    const Point y{-0.3, 0.1};
    EXPECT_EQ(kernel(x, y, KernelSpec{0, 2.0, 2}), 1.0);
    EXPECT_DOUBLE_EQ(kernel(x, y, KernelSpec{3, 1.5, 2}), kernel(y, x, KernelSpec{3, 1.5, 2}));
    EXPECT_NEAR(kernel(x, x, KernelSpec{2, 1.0, 2}), 4.0, 1e-14);
}

TEST(KernelSpec, Validation) {
    EXPECT_THROW((KernelSpec{1, 0.5, 2}.validate()), std::invalid_argument);
    EXPECT_THROW((KernelSpec{-1, 1.0, 2}.validate()), std::invalid_argument);
    EXPECT_THROW((KernelSpec{1, 1.0, 0}.validate()), std::invalid_argument);
    EXPECT_TRUE((KernelSpec{1, 1.0, 2}.bias_on_boundary()));
    EXPECT_FALSE((KernelSpec{1, 1.2, 2}.bias_on_boundary()));
}

TEST(PointCloud, RoundTrip) {
    const auto pts = draw(BallSpec::unit(3), 50, 8);
    std::stringstream ss;
    write_point_cloud(ss, pts);
    EXPECT_EQ(ss.str().substr(0, 9), "x0,x1,x2\n");
    EXPECT_EQ(read_point_cloud(ss), pts);
}

TEST(PointCloud, RejectsMalformedInput) {
    std::stringstream bad_header("a,b\n1,2\n");
    EXPECT_THROW(read_point_cloud(bad_header), std::invalid_argument);
    std::stringstream ragged("x0,x1\n1,2\n3\n");
    EXPECT_THROW(read_point_cloud(ragged), std::invalid_argument);
    std::stringstream junk("x0\nabc\n");
    EXPECT_THROW(read_point_cloud(junk), std::invalid_argument);
    std::stringstream empty("");
    EXPECT_THROW(read_point_cloud(empty), std::invalid_argument);
}

TEST(SepQuery, DimensionsMustAgree) {
    EXPECT_NO_THROW(SepQuery::self(BallSpec::unit(3), Point(3, 0.0)));
    EXPECT_THROW(SepQuery::self(BallSpec::unit(3), Point(2, 0.0)), std::invalid_argument);
    const FeaturePushforward fp{BallSpec::unit(2), KernelSpec{2, 1.5, 2}};
    EXPECT_EQ(ambient_dim(fp), 6);
    EXPECT_NO_THROW(SepQuery::self(fp, Point(6, 0.0)));
    EXPECT_THROW(SepQuery::self(fp, Point(2, 0.0)), std::invalid_argument);
}

TEST(PointSampler, PushforwardSamplesAreFeatureVectors) {
    const KernelSpec spec{3, 2.0, 2};
    PointSampler sampler(FeaturePushforward{BallSpec::unit(2), spec});
    ASSERT_EQ(sampler.dim(), feature_dimension(2, 3));
    RandomStream rng(1, 0);
    std::vector<double> phi(sampler.dim());
    for (int i = 0; i < 100; ++i) {
        sampler.draw(rng, phi);
        // The first coordinate is b^deg for every input.
        EXPECT_DOUBLE_EQ(phi[0], 8.0);
        // |phi(x)|^2 = kappa(x, x) <= (b^2 + 1)^deg on the unit ball.
        EXPECT_LE(dot(phi, phi), std::pow(5.0, 3) + 1e-9);
    }
}
