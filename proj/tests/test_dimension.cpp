#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reldim/dimension.hpp"

using namespace reldim;

namespace {

// f_theta for d = 1 from the interval picture: for fixed x the admissible y
// form a half-line, so the inner probability is a clipped length.
double f_theta_1d_oracle(double theta) {
    auto inner = [&](double x) {
        const double edge = x + theta / x;
        const double len = x > 0.0 ? 1.0 - std::clamp(edge, -1.0, 1.0) : std::clamp(edge, -1.0, 1.0) + 1.0;
        return len / 2.0;
    };
    return oracle::midpoint(inner, -1.0, 1.0, 2000000) / 2.0;
}

}  // namespace

TEST(FTheta, ZeroThetaClosedForm) {
    for (int d = 1; d <= 20; ++d) {
        const double exact = std::ldexp(1.0, -(d + 1));
        EXPECT_EQ(f_theta(0.0, d).value, exact);
        const QuadResult r = f_theta_two_cap(0.0, d);
        EXPECT_TRUE(r.converged);
        EXPECT_NEAR(r.value, exact, 1e-10) << d;
    }
    EXPECT_EQ(f_theta(0.0, 10).value, 1.0 / 2048.0);
}

TEST(FTheta, NonIntegerDimension) {
    for (double d : {0.5, 2.5, 7.25}) {
        EXPECT_NEAR(f_theta_two_cap(0.0, d).value, std::exp2(-(d + 1.0)), 1e-10) << d;
    }
}

TEST(FTheta, CertainAndImpossibleBranches) {
    for (int d = 1; d <= 20; ++d) {
        EXPECT_EQ(f_theta(-2.0, d).value, 1.0);
        EXPECT_EQ(f_theta(-2.5, d).value, 1.0);
        EXPECT_EQ(f_theta(0.25, d).value, 0.0);
        EXPECT_EQ(f_theta(0.3, d).value, 0.0);
    }
}

TEST(FTheta, GeneralPathAgreesWithBranches) {
    for (int d : {1, 3, 9}) {
        EXPECT_NEAR(f_theta_two_cap(-2.0, d).value, 1.0, 1e-10);
        EXPECT_NEAR(f_theta_two_cap(0.25, d).value, 0.0, 1e-10);
    }
}

TEST(FTheta, OneDimensionMatchesIntervalOracle) {
    for (double theta : {-1.9, -1.5, -1.0, -0.6, -0.2, 0.05, 0.1, 0.2}) {
        EXPECT_NEAR(f_theta(theta, 1).value, f_theta_1d_oracle(theta), 2e-7) << theta;
    }
}

TEST(FTheta, TwoDimensionsMatchesMonteCarlo) {
    std::mt19937_64 rng(7);
    const int n = 4000000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        const auto x = oracle::ball_point(2, rng);
        const auto y = oracle::ball_point(2, rng);
        if ((y[0] - x[0]) * x[0] + (y[1] - x[1]) * x[1] >= 0.1) ++hits;
    }
    const double p = f_theta(0.1, 2).value;
    EXPECT_NEAR(static_cast<double>(hits) / n, p, 4.0 * oracle::binom_se(p, n));
}

TEST(FTheta, NonIncreasingInTheta) {
    for (int d = 1; d <= 10; ++d) {
        double prev = 1.0;
        for (int i = 0; i < 50; ++i) {
            const double theta = -2.2 + 2.5 * i / 49.0;
            const double v = f_theta(theta, d).value;
            EXPECT_LE(v, prev + 1e-12) << d << " " << theta;
            prev = v;
        }
    }
}

TEST(FTheta, MarginMinusOneStaysAboveHalf) {
    for (int d = 1; d <= 50; ++d) {
        const QuadResult r = f_theta(-1.0, d);
        EXPECT_TRUE(r.converged) << d;
        EXPECT_GE(r.value, 0.5) << d;
    }
}

TEST(FTheta, ReducedIntegralMatchesTwoCap) {
    for (int d : {1, 2, 4, 8, 15}) {
        for (double theta : {0.01, 0.05, 0.1, 0.2, 0.24}) {
            EXPECT_NEAR(f_theta_reduced(theta, d).value, f_theta_two_cap(theta, d).value, 1e-9)
                << d << " " << theta;
        }
    }
    EXPECT_THROW(f_theta_reduced(-0.1, 3), std::domain_error);
}

TEST(FTheta, RejectsBadDimension) {
    EXPECT_THROW(f_theta(0.0, 0.0), std::domain_error);
    EXPECT_THROW(f_theta(-0.5, -1.0), std::domain_error);
    EXPECT_THROW(f_theta(std::nan(""), 2.0), std::domain_error);
}

TEST(ConditionalSepProb, MatchesMonteCarlo) {
    // Fix y = t e1 and count x ~ U(B_d) with (y - x, x) >= theta.
    std::mt19937_64 rng(31);
    const int n = 1000000;
    struct Case {
        int d;
        double theta;
        double t;
    };
    for (const Case c : {Case{2, -0.5, 0.6}, Case{3, -1.2, 0.9}, Case{4, 0.05, 0.8}, Case{3, -0.1, 0.3}}) {
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            const auto x = oracle::ball_point(c.d, rng);
            double s = c.t * x[0];
            for (double v : x) s -= v * v;
            if (s >= c.theta) ++hits;
        }
        const double p = conditional_sep_prob(c.theta, c.d, c.t);
        EXPECT_NEAR(static_cast<double>(hits) / n, p, 4.0 * oracle::binom_se(p, n) + 1e-7)
            << c.d << " " << c.theta << " " << c.t;
    }
}

TEST(ConditionalSepProb, ConcentricLimit) {
    // At |y| = 0 the event is |x|^2 <= -theta.
    EXPECT_EQ(conditional_sep_prob(0.1, 3, 0.0), 0.0);
    EXPECT_EQ(conditional_sep_prob(0.0, 3, 0.0), 0.0);
    EXPECT_NEAR(conditional_sep_prob(-0.25, 3, 0.0), 0.125, 1e-15);
    EXPECT_EQ(conditional_sep_prob(-1.5, 3, 0.0), 1.0);
    EXPECT_NEAR(conditional_sep_prob(-0.25, 3, 1e-9), 0.125, 1e-8);
}

TEST(SepGeometry, Lengths) {
    const SepGeometry g = SepGeometry::at(-0.5, 0.8);
    EXPECT_NEAR(g.R, std::sqrt(0.16 + 0.5), 1e-15);
    EXPECT_NEAR(g.a, (1.0 - g.R * g.R) / 0.8 - 0.2, 1e-15);
    EXPECT_NEAR(g.b_len, 1.0 - g.a - 0.4, 1e-15);
    EXPECT_EQ(SepGeometry::at(0.3, 0.5).R, 0.0);
    EXPECT_THROW(SepGeometry::at(0.0, 0.0), std::domain_error);
}

TEST(IntrinsicDim, FromProbability) {
    EXPECT_DOUBLE_EQ(intrinsic_dim_from_prob(1.0 / 64.0).value, 5.0);
    EXPECT_DOUBLE_EQ(intrinsic_dim_from_prob(1.0).value, -1.0);
    const DimensionValue inf = intrinsic_dim_from_prob(0.0);
    EXPECT_TRUE(inf.is_infinite());
    EXPECT_THROW(intrinsic_dim_from_prob(1.5), std::domain_error);
    EXPECT_THROW(intrinsic_dim_from_prob(-0.1), std::domain_error);
    for (int d = 1; d <= 30; ++d) EXPECT_DOUBLE_EQ(intrinsic_dim_from_prob(f_theta(0.0, d).value).value, d);
}

TEST(InvertF, RoundTrips) {
    EXPECT_NEAR(invert_f(0.0, std::exp2(-6.0), 1.0, 20.0), 5.0, 1e-9);
    const double p = f_theta(-0.5, 8).value;
    const double d = invert_f(-0.5, p, 1.0, 20.0);
    EXPECT_NEAR(d, 8.0, 1e-6);
    EXPECT_NEAR(f_theta(-0.5, d).value, p, 1e-9);
    const double q = f_theta(-1.0, 3.7).value;
    EXPECT_NEAR(invert_f(-1.0, q, 0.5, 30.0), 3.7, 1e-6);
}

TEST(InvertF, Errors) {
    EXPECT_THROW(invert_f(0.2, 0.01, 1.0, 10.0), std::domain_error);
    EXPECT_THROW(invert_f(-1.5, 0.9, 1.0, 10.0), std::domain_error);
    // 0.9 is above f_0(d) for every d in the bracket.
    EXPECT_THROW(invert_f(0.0, 0.9, 1.0, 10.0), std::invalid_argument);
    EXPECT_THROW(invert_f(0.0, 0.01, 5.0, 2.0), std::invalid_argument);
}

TEST(TwoBallAccuracy, KnownValues) {
    for (int d : {1, 2, 5, 50}) {
        EXPECT_NEAR(two_ball_accuracy(d, 0.0), 0.5, 1e-12);
        EXPECT_EQ(two_ball_accuracy(d, 2.0), 1.0);
        EXPECT_EQ(two_ball_accuracy(d, 2.5), 1.0);
    }
    EXPECT_NEAR(two_ball_accuracy(1, 1.0), 0.75, 1e-14);
    EXPECT_THROW(two_ball_accuracy(2, -0.1), std::domain_error);
}

TEST(TwoBallAccuracy, MonotoneInEpsAndDim) {
    for (int d : {1, 2, 5, 10, 20}) {
        double prev = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double eps = 2.0 * i / 50.0;
            const double a = two_ball_accuracy(d, eps);
            EXPECT_GE(a, prev - 1e-15);
            prev = a;
            if (eps > 0.0 && eps < 2.0) EXPECT_GE(two_ball_accuracy(d + 1, eps), a - 1e-15);
        }
    }
}

TEST(TwoBallQuery, Roles) {
    const SepQuery yx = two_ball_relative_dim_query(3, 1.5, RelativeDim::y_to_x);
    const SepQuery xy = two_ball_relative_dim_query(3, 1.5, RelativeDim::x_to_y);
    EXPECT_EQ(std::get<BallSpec>(yx.y_dist).center[0], 1.5);
    EXPECT_EQ(std::get<BallSpec>(yx.x_dist).center[0], 0.0);
    EXPECT_EQ(std::get<BallSpec>(xy.y_dist).center[0], 0.0);
    EXPECT_EQ(std::get<BallSpec>(xy.x_dist).center[0], 1.5);
    EXPECT_EQ(yx.centre, Point(3, 0.0));
    EXPECT_EQ(xy.theta, 0.0);
    EXPECT_THROW(two_ball_relative_dim_query(0, 1.0, RelativeDim::y_to_x), std::domain_error);
    EXPECT_THROW(two_ball_relative_dim_query(2, -1.0, RelativeDim::y_to_x), std::domain_error);
}
