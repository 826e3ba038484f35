#include "reldim/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "reldim/specfun.hpp"

namespace reldim {

namespace {

void check_confidence(double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence must lie in (0, 1)");
    }
}

std::uint64_t chunk_count(std::uint64_t n_pairs) {
    return (n_pairs + kChunkPairs - 1) / kChunkPairs;
}

std::uint64_t chunk_size(std::uint64_t n_pairs, std::uint64_t chunk) {
    const std::uint64_t begin = chunk * kChunkPairs;
    return std::min(kChunkPairs, n_pairs - begin);
}

// Event count for one chunk. Each pair draws y first, then x.
std::uint64_t count_chunk(const SepQuery& q, PointSampler& ys, PointSampler& xs, std::uint64_t seed,
                          std::uint64_t chunk, std::uint64_t pairs, std::vector<double>& y,
                          std::vector<double>& x) {
    RandomStream rng(seed, chunk);
    const std::size_t n = q.centre.size();
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < pairs; ++i) {
        ys.draw(rng, y);
        xs.draw(rng, x);
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += (x[k] - y[k]) * (y[k] - q.centre[k]);
        if (s >= q.theta) ++hits;
    }
    return hits;
}

double dim_of(double p) {
    return intrinsic_dim_from_prob(std::clamp(p, 0.0, 1.0)).value;
}

nlohmann::json number_or_inf(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
    check_confidence(confidence);
    if (trials == 0) throw std::invalid_argument("clopper_pearson: trials must be >= 1");
    if (successes > trials) throw std::invalid_argument("clopper_pearson: successes > trials");
    const double alpha = 1.0 - confidence;
    const double k = static_cast<double>(successes);
    const double n = static_cast<double>(trials);
    Interval ci;
    if (successes == 0) {
        ci.low = 0.0;
        ci.high = 1.0 - std::pow(0.5 * alpha, 1.0 / n);
    } else if (successes == trials) {
        ci.low = std::pow(0.5 * alpha, 1.0 / n);
        ci.high = 1.0;
    } else {
        ci.low = inv_reg_inc_beta(0.5 * alpha, k, n - k + 1.0);
        ci.high = inv_reg_inc_beta(1.0 - 0.5 * alpha, k + 1.0, n - k);
    }
    return ci;
}

ProbEstimate ProbEstimate::from_counts(std::uint64_t successes, std::uint64_t n, double confidence,
                                       std::uint64_t seed) {
    const Interval ci = clopper_pearson(successes, n, confidence);
    ProbEstimate e;
    e.successes = successes;
    e.n_pairs = n;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(n);
    // Bisection in the inverse beta can land an ulp inside p_hat.
    e.ci_low = std::min(ci.low, e.p_hat);
    e.ci_high = std::max(ci.high, e.p_hat);
    e.seed = seed;
    e.confidence = confidence;
    return e;
}

double ProbEstimate::std_error(double p) const {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n_pairs));
}

ProbEstimate estimate_sep_prob(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                               std::uint64_t seed, Execution exec) {
    if (exec == Execution::serial) return serial::estimate_sep_prob(query, n_pairs, confidence, seed);
    query.validate();
    check_confidence(confidence);
    if (n_pairs == 0) throw std::invalid_argument("estimate_sep_prob: n_pairs must be >= 1");
    const std::uint64_t chunks = chunk_count(n_pairs);
    std::vector<std::uint64_t> counts(chunks, 0);
#pragma omp parallel
    {
        PointSampler ys(query.y_dist);
        PointSampler xs(query.x_dist);
        std::vector<double> y(ys.dim());
        std::vector<double> x(xs.dim());
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
            const auto chunk = static_cast<std::uint64_t>(c);
            counts[chunk] = count_chunk(query, ys, xs, seed, chunk, chunk_size(n_pairs, chunk), y, x);
        }
    }
    std::uint64_t hits = 0;
    for (auto h : counts) hits += h;
    return ProbEstimate::from_counts(hits, n_pairs, confidence, seed);
}

namespace serial {

ProbEstimate estimate_sep_prob(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                               std::uint64_t seed) {
    query.validate();
    check_confidence(confidence);
    if (n_pairs == 0) throw std::invalid_argument("estimate_sep_prob: n_pairs must be >= 1");
    PointSampler ys(query.y_dist);
    PointSampler xs(query.x_dist);
    std::vector<double> y(ys.dim());
    std::vector<double> x(xs.dim());
    std::uint64_t hits = 0;
    for (std::uint64_t c = 0; c < chunk_count(n_pairs); ++c) {
        hits += count_chunk(query, ys, xs, seed, c, chunk_size(n_pairs, c), y, x);
    }
    return ProbEstimate::from_counts(hits, n_pairs, confidence, seed);
}

}  // namespace serial

DimEstimate dim_from_prob_estimate(const ProbEstimate& prob) {
    DimEstimate e;
    e.prob = prob;
    e.dim = intrinsic_dim_from_prob(prob.p_hat);
    e.dim.source = DimensionSource::estimated;
    e.ci_low = dim_of(prob.ci_high);
    e.ci_high = dim_of(prob.ci_low);
    return e;
}

DimEstimate estimate_dim(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                         std::uint64_t seed, Execution exec) {
    if (query.theta != 0.0) {
        throw std::domain_error(
            "estimate_dim: intrinsic dimension is defined at theta = 0; use estimate_sep_prob for a margin");
    }
    return dim_from_prob_estimate(estimate_sep_prob(query, n_pairs, confidence, seed, exec));
}

ProbEstimate estimate_sep_prob_from_samples(std::span<const Point> y_points,
                                            std::span<const Point> x_points,
                                            std::span<const double> centre, double theta,
                                            double confidence) {
    check_confidence(confidence);
    const bool same = y_points.data() == x_points.data() && y_points.size() == x_points.size();
    const std::size_t n = centre.size();
    auto check = [n](std::span<const Point> pts) {
        for (const auto& p : pts) {
            if (p.size() != n) throw std::invalid_argument("sample point dimension differs from centre");
        }
    };
    check(y_points);
    check(x_points);
    const std::uint64_t pairs = same ? y_points.size() * (y_points.size() - (y_points.empty() ? 0 : 1))
                                     : y_points.size() * x_points.size();
    if (pairs == 0) throw std::invalid_argument("estimate_sep_prob_from_samples: no pairs available");

    std::vector<std::uint64_t> counts(y_points.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(y_points.size()); ++j) {
        const Point& y = y_points[static_cast<std::size_t>(j)];
        std::uint64_t hits = 0;
        for (std::size_t i = 0; i < x_points.size(); ++i) {
            if (same && i == static_cast<std::size_t>(j)) continue;
            const Point& x = x_points[i];
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += (x[k] - y[k]) * (y[k] - centre[k]);
            if (s >= theta) ++hits;
        }
        counts[static_cast<std::size_t>(j)] = hits;
    }
    std::uint64_t hits = 0;
    for (auto h : counts) hits += h;
    return ProbEstimate::from_counts(hits, pairs, confidence, 0);
}

ProbEstimate estimate_sep_prob_from_samples(std::span<const Point> points, std::span<const double> centre,
                                            double theta, double confidence) {
    return estimate_sep_prob_from_samples(points, points, centre, theta, confidence);
}

nlohmann::json to_json(const DimEstimate& est) {
    nlohmann::json j;
    j["p_hat"] = est.prob.p_hat;
    j["n_pairs"] = est.prob.n_pairs;
    j["ci_low"] = est.prob.ci_low;
    j["ci_high"] = est.prob.ci_high;
    j["seed"] = est.prob.seed;
    j["dim"] = number_or_inf(est.dim.value);
    j["dim_ci"] = nlohmann::json::array({number_or_inf(est.ci_low), number_or_inf(est.ci_high)});
    return j;
}

}  // namespace reldim
