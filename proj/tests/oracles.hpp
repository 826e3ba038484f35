#pragma once

// Reference computations for tests. Nothing here calls into the library:
// integrals use composite Simpson, samples use rejection from the cube.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

template <class F>
double simpson(F&& f, double a, double b, int n = 20000) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Composite midpoint rule; never evaluates the ends or the cell edges, so a
// jump placed on a cell edge costs nothing.
template <class F>
double midpoint(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
    return s * h;
}

// Uniform point in the unit d-ball by rejection; fine for d <= 6.
inline std::vector<double> ball_point(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> p(static_cast<std::size_t>(d));
    for (;;) {
        double r2 = 0.0;
        for (double& v : p) {
            v = u(rng);
            r2 += v * v;
        }
        if (r2 <= 1.0) return p;
    }
}

// Standard error of a binomial fraction.
inline double binom_se(double p, double n) {
    return std::sqrt(p * (1.0 - p) / n);
}

// I_x(a, b) by Simpson on the defining integral. The integrand must be
// bounded on [0, x]: a >= 1, and b >= 1 unless x < 1.
inline double inc_beta_simpson(double x, double a, double b) {
    auto f = [&](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0); };
    const double beta = std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
    return simpson(f, 0.0, x) / beta;
}

}  // namespace oracle
