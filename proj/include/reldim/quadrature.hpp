#pragma once

// Adaptive panel-subdivision Gauss-Legendre integration in one dimension and
// its nested (tensor-product) extension to the unit square.
//
// Each panel carries two estimates: the n-point rule on the whole panel and
// the sum of the n-point rule on its two halves. Their difference is the
// panel's error estimate and the half-panel sum is its value. The panel with
// the largest error is split until the total error meets the tolerance or the
// panel budget runs out. Splitting reuses the half-panel sums as the
// children's coarse estimates, so a split costs 2n new evaluations per child.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace reldim {

struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 4096;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
            throw std::invalid_argument("QuadSpec: tolerances must be positive");
        }
        if (max_panels < 1) throw std::invalid_argument("QuadSpec: max_panels must be >= 1");
    }
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
    bool converged = true;
};

/// How the outer integrand of integrate_2d is evaluated. Parallel evaluation
/// fills a fixed array of node values and sums it in node order, so both
/// modes give bit-identical results.
enum class Execution { serial, parallel };

/// Thrown where a caller needs a number and the quadrature could not deliver
/// one within tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace quad_detail {

inline constexpr int kNodes = 10;

struct Rule {
    std::array<double, kNodes> x{};
    std::array<double, kNodes> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
inline Rule make_gauss_legendre() {
    Rule r;
    constexpr int n = kNodes;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return r;
}

inline const Rule& rule() {
    static const Rule r = make_gauss_legendre();
    return r;
}

struct Panel {
    double a;
    double b;
    double coarse;
    double left;
    double right;

    double value() const { return left + right; }
    double error() const { return std::fabs(left + right - coarse); }
};

// Evaluates f at the n nodes of each interval in `spans` and returns the
// per-interval rule values. Node values are stored before summation so the
// result does not depend on evaluation order.
template <class F>
void apply_rule(F& f, std::span<const std::array<double, 2>> spans, std::span<double> out,
                Execution exec) {
    const Rule& r = rule();
    const std::size_t total = spans.size() * kNodes;
    std::vector<double> vals(total);
    auto eval = [&](std::size_t k) {
        const auto& s = spans[k / kNodes];
        const double half = 0.5 * (s[1] - s[0]);
        const double mid = 0.5 * (s[1] + s[0]);
        vals[k] = f(mid + half * r.x[k % kNodes]);
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(total); ++k) {
            eval(static_cast<std::size_t>(k));
        }
    } else {
        for (std::size_t k = 0; k < total; ++k) eval(k);
    }
    for (std::size_t p = 0; p < spans.size(); ++p) {
        double sum = 0.0;
        for (int i = 0; i < kNodes; ++i) sum += r.w[i] * vals[p * kNodes + i];
        out[p] = 0.5 * (spans[p][1] - spans[p][0]) * sum;
    }
}

template <class F>
QuadResult integrate_adaptive(F& f, std::vector<double> cuts, const QuadSpec& spec, Execution exec) {
    spec.validate();
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    QuadResult res;
    if (cuts.size() < 2) return res;

    std::vector<Panel> panels;
    {
        std::vector<std::array<double, 2>> spans;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double a = cuts[i];
            const double b = cuts[i + 1];
            const double m = 0.5 * (a + b);
            spans.push_back({a, b});
            spans.push_back({a, m});
            spans.push_back({m, b});
        }
        std::vector<double> vals(spans.size());
        apply_rule(f, spans, vals, exec);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            panels.push_back({cuts[i], cuts[i + 1], vals[3 * i], vals[3 * i + 1], vals[3 * i + 2]});
        }
    }

    const double min_width = 64.0 * std::numeric_limits<double>::epsilon() *
                             std::max(1.0, std::max(std::fabs(cuts.front()), std::fabs(cuts.back())));
    // Panels too narrow to split further keep their error and leave the queue.
    std::vector<Panel> frozen;

    auto by_error = [](const Panel& p, const Panel& q) { return p.error() < q.error(); };
    std::make_heap(panels.begin(), panels.end(), by_error);

    double value = 0.0;
    double error = 0.0;
    auto recompute = [&] {
        value = 0.0;
        error = 0.0;
        for (const auto& p : panels) {
            value += p.value();
            error += p.error();
        }
        for (const auto& p : frozen) {
            value += p.value();
            error += p.error();
        }
    };
    recompute();

    int splits = 0;
    while (!panels.empty() &&
           error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value)) &&
           static_cast<int>(panels.size() + frozen.size()) < spec.max_panels) {
        std::pop_heap(panels.begin(), panels.end(), by_error);
        const Panel worst = panels.back();
        panels.pop_back();
        if (worst.b - worst.a < min_width) {
            frozen.push_back(worst);
            continue;
        }
        const double m = 0.5 * (worst.a + worst.b);
        const double q1 = 0.5 * (worst.a + m);
        const double q3 = 0.5 * (m + worst.b);
        const std::array<std::array<double, 2>, 4> spans{{{worst.a, q1}, {q1, m}, {m, q3}, {q3, worst.b}}};
        std::array<double, 4> vals{};
        apply_rule(f, spans, vals, exec);
        const Panel lo{worst.a, m, worst.left, vals[0], vals[1]};
        const Panel hi{m, worst.b, worst.right, vals[2], vals[3]};
        panels.push_back(lo);
        std::push_heap(panels.begin(), panels.end(), by_error);
        panels.push_back(hi);
        std::push_heap(panels.begin(), panels.end(), by_error);
        // Running sums drift under cancellation; resum exactly now and then.
        if (++splits % 64 == 0) {
            recompute();
        } else {
            value += lo.value() + hi.value() - worst.value();
            error += lo.error() + hi.error() - worst.error();
        }
    }
    recompute();

    res.value = value;
    res.error = error;
    res.panels = static_cast<int>(panels.size() + frozen.size());
    res.converged = error <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
    return res;
}

}  // namespace quad_detail

/// Integrates f over [a, b]. Optional interior `breakpoints` (kinks or jumps
/// of f) start the subdivision; points outside (a, b) are ignored.
template <class F>
QuadResult integrate_1d(F&& f, double a, double b, const QuadSpec& spec = {},
                        std::span<const double> breakpoints = {},
                        Execution exec = Execution::serial) {
    if (!(a <= b)) throw std::invalid_argument("integrate_1d: require a <= b");
    if (a == b) return {};
    std::vector<double> cuts{a, b};
    for (double p : breakpoints) {
        if (p > a && p < b) cuts.push_back(p);
    }
    return quad_detail::integrate_adaptive(f, std::move(cuts), spec, exec);
}

/// Integrates f(s, t) over the unit square as an outer adaptive integral in t
/// of inner adaptive integrals in s. `inner_breaks(t)` may supply breakpoints
/// in s for a given t; `outer_breaks` are breakpoints in t.
template <class F, class InnerBreaks>
QuadResult integrate_2d(F&& f, const QuadSpec& spec, InnerBreaks&& inner_breaks,
                        std::span<const double> outer_breaks = {},
                        Execution exec = Execution::serial) {
    spec.validate();
    // Inner tolerance is tighter so the outer error estimate is not swamped
    // by inner noise.
    QuadSpec inner = spec;
    inner.abs_tol = 0.1 * spec.abs_tol;
    inner.rel_tol = 0.1 * spec.rel_tol;

    bool inner_ok = true;
    double worst_inner = 0.0;
    std::vector<char> flags;
    auto outer = [&](double t) {
        const std::vector<double> br = inner_breaks(t);
        const QuadResult r = integrate_1d([&](double s) { return f(s, t); }, 0.0, 1.0, inner, br);
        if (!r.converged) {
#pragma omp atomic write
            inner_ok = false;
        }
#pragma omp critical(reldim_quad2d)
        worst_inner = std::max(worst_inner, r.error);
        return r.value;
    };
    QuadResult res = integrate_1d(outer, 0.0, 1.0, spec, outer_breaks, exec);
    res.error += worst_inner;
    res.converged = res.converged && inner_ok;
    return res;
}

template <class F>
QuadResult integrate_2d(F&& f, const QuadSpec& spec = {}, Execution exec = Execution::serial) {
    return integrate_2d(std::forward<F>(f), spec, [](double) { return std::vector<double>{}; },
                        {}, exec);
}

}  // namespace reldim
