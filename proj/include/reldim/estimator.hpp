#pragma once

#include <cstdint>
#include <span>

#include <json.hpp>

#include "reldim/dimension.hpp"
#include "reldim/quadrature.hpp"
#include "reldim/sep_query.hpp"

namespace reldim {

/// Pairs per Monte Carlo chunk. Chunk i always draws from RandomStream(seed, i).
inline constexpr std::uint64_t kChunkPairs = std::uint64_t{1} << 16;

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// Exact (Clopper-Pearson) two-sided interval for `successes` out of `trials`.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence);

struct ProbEstimate {
    double p_hat = 0.0;
    std::uint64_t n_pairs = 0;
    std::uint64_t successes = 0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t seed = 0;
    double confidence = 0.95;

    static ProbEstimate from_counts(std::uint64_t successes, std::uint64_t n, double confidence,
                                    std::uint64_t seed);

    /// Binomial standard error sqrt(p(1 - p)/n) at the supplied p.
    double std_error(double p) const;
};

/// Dimension estimate with the interval obtained by mapping the probability
/// interval through -log2(p) - 1 (decreasing, so the endpoints swap).
struct DimEstimate {
    DimensionValue dim;
    double ci_low = 0.0;
    double ci_high = 0.0;
    ProbEstimate prob;
};

/// Fraction of n_pairs independent draws with (x - y, y - c) >= theta, with a
/// Clopper-Pearson interval. Deterministic in (seed, n_pairs) for any number
/// of OpenMP threads.
ProbEstimate estimate_sep_prob(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                               std::uint64_t seed, Execution exec = Execution::parallel);

/// Dimension from a theta = 0 query; rejects any other theta with
/// std::domain_error.
DimEstimate estimate_dim(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                         std::uint64_t seed, Execution exec = Execution::parallel);

DimEstimate dim_from_prob_estimate(const ProbEstimate& prob);

/// Pairwise U-statistic over fixed samples: every (x, y) with x from
/// `x_points` and y from `y_points` counts once. When both spans are the same
/// sample, pairs of a point with itself are skipped. The pairs are not
/// independent, so the interval is only indicative.
ProbEstimate estimate_sep_prob_from_samples(std::span<const Point> y_points,
                                            std::span<const Point> x_points,
                                            std::span<const double> centre, double theta,
                                            double confidence);

/// Single-sample form: all ordered pairs of distinct points.
ProbEstimate estimate_sep_prob_from_samples(std::span<const Point> points,
                                            std::span<const double> centre, double theta,
                                            double confidence);

/// {p_hat, n_pairs, ci_low, ci_high, seed, dim, dim_ci}. Infinite dimensions
/// are written as the string "inf".
nlohmann::json to_json(const DimEstimate& est);

namespace serial {

/// Straight chunk-by-chunk loop; reference for the OpenMP path in tests.
ProbEstimate estimate_sep_prob(const SepQuery& query, std::uint64_t n_pairs, double confidence,
                               std::uint64_t seed);

}  // namespace serial

}  // namespace reldim
