#include "reldim/polykernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "reldim/specfun.hpp"

namespace reldim {

void PolyQuery::validate() const {
    spec.validate();
    if (spec.deg < 1) throw std::invalid_argument("PolyQuery: degree must be >= 1");
    if (!std::isfinite(theta)) throw std::invalid_argument("PolyQuery: theta must be finite");
}

double q_mean_kernel(double s, const PolyQuery& query) {
    const double b2 = query.spec.bias * query.spec.bias;
    return std::pow(b2, query.spec.deg) * hyp2f1_degree(query.spec.deg, query.spec.dim, s * s / (b2 * b2));
}

double decision_threshold(double s, double t, const PolyQuery& query) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const int k = query.spec.deg;
    const double b2 = query.spec.bias * query.spec.bias;
    const double rhs = query.theta + std::pow(b2 + t * t, k) + q_mean_kernel(s, query) - q_mean_kernel(t, query);
    // b^2 + x.y >= 0 whenever b >= 1 and |x|, |y| <= 1, so a non-positive
    // right-hand side is always met.
    if (rhs <= 0.0) return -inf;
    const double excess = std::pow(rhs, 1.0 / k) - b2;
    const double st = s * t;
    if (st > 0.0) return excess / st;
    return excess <= 0.0 ? -inf : inf;
}

namespace {

// The event boundaries Q(s, t) = +1 and Q(s, t) = -1 at fixed t, written as
// P(s) = (b^2 + sign s t)^deg - RHS(s, t) = 0. P is a polynomial of degree at
// most deg in s, and Q >= 1 iff P(+1) <= 0, Q <= -1 iff P(-1) >= 0.
class BoundaryPoly {
public:
    BoundaryPoly(const PolyQuery& query, double t, double sign) : k_(query.spec.deg), t_(t), sign_(sign) {
        b2_ = query.spec.bias * query.spec.bias;
        // q(s) = b^{2k} sum_m c_m (s^2 / b^4)^m, with c_m the 2F1 series terms.
        const double a = 0.5 * (1 - k_);
        const double bb = -0.5 * k_;
        const double c = 0.5 * query.spec.dim + 1.0;
        double term = std::pow(b2_, k_);
        for (int m = 0;; ++m) {
            q_coeffs_.push_back(term);
            const double num = (a + m) * (bb + m);
            if (num == 0.0) break;
            term *= num / ((c + m) * (m + 1)) / (b2_ * b2_);
        }
        constant_ = query.theta + std::pow(b2_ + t * t, k_) - q_mean_kernel(t, query);
    }

    int degree() const { return k_; }

    // j-th derivative in s.
    double deriv(int j, double s) const {
        double v = 0.0;
        if (j <= k_) {
            double fall = 1.0;
            for (int i = 0; i < j; ++i) fall *= k_ - i;
            v = fall * std::pow(sign_ * t_, j) * std::pow(b2_ + sign_ * s * t_, k_ - j);
        }
        for (std::size_t m = 0; m < q_coeffs_.size(); ++m) {
            const int p = 2 * static_cast<int>(m);
            if (p < j) continue;
            double fall = 1.0;
            for (int i = 0; i < j; ++i) fall *= p - i;
            v -= q_coeffs_[m] * fall * std::pow(s, p - j);
        }
        if (j == 0) v -= constant_;
        return v;
    }

    // Sign changes of the j-th derivative on [lo, hi]. The roots of the
    // (j+1)-th derivative split the interval into monotone pieces, each
    // holding at most one root.
    void roots(int j, double lo, double hi, std::vector<double>& out) const {
        if (j >= k_) return;  // constant
        std::vector<double> cuts{lo};
        roots(j + 1, lo, hi, cuts);
        cuts.push_back(hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double a = cuts[i];
            double b = cuts[i + 1];
            if (!(b > a)) continue;
            const bool a_neg = deriv(j, a) < 0.0;
            if (a_neg == (deriv(j, b) < 0.0)) continue;
            for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
                const double m = 0.5 * (a + b);
                if ((deriv(j, m) < 0.0) == a_neg) {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
    }

private:
    int k_;
    double t_;
    double sign_;
    double b2_ = 1.0;
    double constant_ = 0.0;
    std::vector<double> q_coeffs_;
};

// Radii s at fixed t where Q(s, t) crosses -1 or +1; the cap-area integrand
// has a kink there (a jump for d = 1).
std::vector<double> inner_breaks(double t, const PolyQuery& query) {
    std::vector<double> s_roots;
    BoundaryPoly(query, t, 1.0).roots(0, 0.0, 1.0, s_roots);
    BoundaryPoly(query, t, -1.0).roots(0, 0.0, 1.0, s_roots);
    return s_roots;
}

// Sign changes of f on a uniform grid over [lo, hi], refined by bisection.
template <class F>
void append_roots(F&& f, double lo, double hi, int grid, std::vector<double>& out) {
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= grid; ++i) {
        const double x1 = lo + (hi - lo) * i / grid;
        const double f1 = f(x1);
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double a = x0;
            double b = x1;
            const bool a_neg = f0 < 0.0;
            for (int it = 0; it < 60 && b - a > 1e-15; ++it) {
                const double m = 0.5 * (a + b);
                if ((f(m) < 0.0) == a_neg) {
                    a = m;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
}

// Radii t where the set of inner breaks changes: a break enters or leaves
// [0, 1] through s = 0 or s = 1, or two breaks merge and vanish. The inner
// integral has a kink (or a square-root edge) at each.
std::vector<double> outer_breaks(const PolyQuery& query) {
    constexpr int grid = 128;
    std::vector<double> t_roots;
    for (double sign : {1.0, -1.0}) {
        for (double s : {0.0, 1.0}) {
            append_roots([&](double t) { return BoundaryPoly(query, t, sign).deriv(0, s); }, 0.0, 1.0, grid,
                         t_roots);
        }
    }
    auto count = [&](double t) { return inner_breaks(t, query).size(); };
    double t0 = 0.0;
    std::size_t c0 = count(t0);
    for (int i = 1; i <= grid; ++i) {
        const double t1 = static_cast<double>(i) / grid;
        const std::size_t c1 = count(t1);
        if (c1 != c0) {
            double a = t0;
            double b = t1;
            for (int it = 0; it < 50 && b - a > 1e-14; ++it) {
                const double m = 0.5 * (a + b);
                if (count(m) == c0) {
                    a = m;
                } else {
                    b = m;
                }
            }
            t_roots.push_back(0.5 * (a + b));
        }
        t0 = t1;
        c0 = c1;
    }
    return t_roots;
}

std::vector<double> to_power(std::vector<double> r, int d) {
    for (double& v : r) v = std::pow(v, d);
    std::sort(r.begin(), r.end());
    return r;
}

}  // namespace

QuadSpec default_poly_spec() {
    return QuadSpec{1e-14, 1e-9, 4096};
}

QuadResult poly_sep_prob(const PolyQuery& query, const QuadSpec& spec, Execution exec) {
    query.validate();
    const int d = query.spec.dim;
    const double inv_d = 1.0 / d;
    const CapAreaFraction area(d);
    // u = s^d, v = t^d turn the radial densities d s^{d-1}, d t^{d-1} uniform.
    auto integrand = [&](double u, double v) {
        const double s = std::pow(u, inv_d);
        const double t = std::pow(v, inv_d);
        return area(decision_threshold(s, t, query));
    };
    const std::vector<double> outer = to_power(outer_breaks(query), d);
    auto inner = [&](double v) { return to_power(inner_breaks(std::pow(v, inv_d), query), d); };
    return integrate_2d(integrand, spec, inner, outer, exec);
}

PolyDimension poly_intrinsic_dim(const KernelSpec& spec, const QuadSpec& quad, Execution exec) {
    PolyDimension out;
    out.prob = poly_sep_prob(PolyQuery{spec, 0.0}, quad, exec);
    out.dim = intrinsic_dim_from_prob(std::clamp(out.prob.value, 0.0, 1.0));
    return out;
}

bool DegreeSweep::converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const DegreeRow& r) { return r.converged; });
}

DegreeSweep optimal_degree(int d, double bias, int deg_max, const QuadSpec& quad, Execution exec) {
    if (deg_max < 1) throw std::invalid_argument("optimal_degree: deg_max must be >= 1");
    DegreeSweep sweep;
    for (int deg = 1; deg <= deg_max; ++deg) {
        const PolyDimension pd = poly_intrinsic_dim(KernelSpec{deg, bias, d}, quad, exec);
        sweep.rows.push_back({deg, pd.prob.value, pd.dim.value, pd.prob.converged});
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : sweep.rows) {
        if (r.intrinsic_dim > best) {
            best = r.intrinsic_dim;
            sweep.best_degree = r.deg;
        }
    }
    return sweep;
}

}  // namespace reldim
