#include "reldim/learning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace reldim {

namespace {

constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 14;

Point mean_of(std::span<const Point> pts) {
    Point m(pts.front().size(), 0.0);
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += p[i];
    }
    for (double& v : m) v /= static_cast<double>(pts.size());
    return m;
}

void check_dim(std::span<const double> z, std::size_t n) {
    if (z.size() != n) {
        throw std::invalid_argument("classifier: point has dimension " + std::to_string(z.size()) +
                                    ", model expects " + std::to_string(n));
    }
}

// L(z) over a contiguous block of k training points.
double score_block(std::span<const double> z, std::span<const double> ys, std::size_t k,
                   std::span<const double> c) {
    const std::size_t n = c.size();
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double* y = ys.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) total += (z[j] - y[j]) * (y[j] - c[j]);
    }
    return total / static_cast<double>(k);
}

struct TrialCounts {
    std::uint64_t y_hits = 0;
    std::uint64_t x_hits = 0;
};

TrialCounts run_chunk(const BallSpec& y_ball, const BallSpec& x_ball, std::span<const double> c,
                      double theta, std::size_t k, std::uint64_t seed, std::uint64_t chunk,
                      std::uint64_t trials) {
    RandomStream rng(seed, chunk);
    const std::size_t n = c.size();
    std::vector<double> train(k * n);
    std::vector<double> y(n);
    std::vector<double> x(n);
    TrialCounts out;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
            sample_uniform_ball(y_ball, rng, std::span<double>(train).subspan(i * n, n));
        }
        sample_uniform_ball(y_ball, rng, y);
        sample_uniform_ball(x_ball, rng, x);
        if (score_block(y, train, k, c) >= theta) ++out.y_hits;
        if (score_block(x, train, k, c) < theta) ++out.x_hits;
    }
    return out;
}

}  // namespace

ClassifierModel ClassifierModel::fit(std::vector<Point> train_y, std::vector<Point> train_x, double theta,
                                     std::optional<Point> centre) {
    ClassifierModel m;
    m.train_y = std::move(train_y);
    m.train_x = std::move(train_x);
    m.theta = theta;
    if (centre) {
        m.centre = std::move(*centre);
    } else if (!m.train_x.empty()) {
        m.centre = mean_of(m.train_x);
    } else {
        throw std::invalid_argument("ClassifierModel::fit: need a centre or X training points");
    }
    m.validate();
    return m;
}

void ClassifierModel::validate() const {
    if (train_y.empty()) throw std::invalid_argument("ClassifierModel: need at least one Y training point");
    if (centre.empty()) throw std::invalid_argument("ClassifierModel: centre is empty");
    for (const auto& y : train_y) check_dim(y, centre.size());
    for (const auto& x : train_x) check_dim(x, centre.size());
}

double ClassifierModel::score(std::span<const double> z) const {
    check_dim(z, centre.size());
    double total = 0.0;
    for (const auto& y : train_y) {
        for (std::size_t j = 0; j < z.size(); ++j) total += (z[j] - y[j]) * (y[j] - centre[j]);
    }
    return total / static_cast<double>(train_y.size());
}

Label classify(const ClassifierModel& model, std::span<const double> z) {
    return model.score(z) >= model.theta ? Label::Y : Label::X;
}

Label FisherForm::classify(std::span<const double> z) const {
    check_dim(z, mu.size());
    double s = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) s += (z[j] - mu[j]) * (mu[j] - centre[j]);
    return s >= theta + offset ? Label::Y : Label::X;
}

FisherForm fisher_form(const ClassifierModel& model) {
    model.validate();
    FisherForm f;
    f.mu = mean_of(model.train_y);
    double mean_sq = 0.0;
    for (const auto& y : model.train_y) mean_sq += squared_norm(y);
    mean_sq /= static_cast<double>(model.train_y.size());
    f.offset = mean_sq - squared_norm(f.mu);
    f.theta = model.theta;
    f.centre = model.centre;
    return f;
}

LearningBounds learning_bounds(double p, int k_train, LearnSide side) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("learning_bounds: p must be in [0, 1]");
    if (k_train < 1) throw std::domain_error("learning_bounds: k_train must be >= 1");
    const double pk = std::pow(p, k_train);
    const double qk = std::pow(1.0 - p, k_train);
    if (side == LearnSide::learn_Y) return {pk, 1.0 - qk};
    return {qk, 1.0 - pk};
}

LearningSimResult simulate_learning(const BallSpec& y_ball, const BallSpec& x_ball,
                                    std::span<const double> centre, double theta, int k_train,
                                    std::uint64_t trials, std::uint64_t seed, double confidence,
                                    Execution exec) {
    y_ball.validate();
    x_ball.validate();
    if (y_ball.dim() != x_ball.dim() || static_cast<int>(centre.size()) != y_ball.dim()) {
        throw std::invalid_argument("simulate_learning: balls and centre must share one dimension");
    }
    if (k_train < 1) throw std::invalid_argument("simulate_learning: k_train must be >= 1");
    if (trials == 0) throw std::invalid_argument("simulate_learning: trials must be >= 1");

    const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<TrialCounts> counts(chunks);
    const auto k = static_cast<std::size_t>(k_train);
    auto one = [&](std::uint64_t c) {
        const std::uint64_t n = std::min(kChunkTrials, trials - c * kChunkTrials);
        counts[c] = run_chunk(y_ball, x_ball, centre, theta, k, seed, c, n);
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) one(static_cast<std::uint64_t>(c));
    } else {
        for (std::uint64_t c = 0; c < chunks; ++c) one(c);
    }
    TrialCounts total;
    for (const auto& c : counts) {
        total.y_hits += c.y_hits;
        total.x_hits += c.x_hits;
    }
    return {ProbEstimate::from_counts(total.y_hits, trials, confidence, seed),
            ProbEstimate::from_counts(total.x_hits, trials, confidence, seed)};
}

}  // namespace reldim
