#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reldim/estimator.hpp"
#include "reldim/geometry.hpp"

namespace reldim {

enum class Label { X, Y };

/// Few-shot classifier: label Y iff L(z) = (1/k) sum_i (z - y_i, y_i - c) >= theta.
struct ClassifierModel {
    std::vector<Point> train_y;
    Point centre;
    double theta = 0.0;
    std::array<std::string, 2> label_names{"X", "Y"};
    /// Training points from X. Only metadata: their influence is through `centre`.
    std::vector<Point> train_x;

    /// Centre defaults to the mean of `train_x`; an explicit centre wins.
    static ClassifierModel fit(std::vector<Point> train_y, std::vector<Point> train_x, double theta,
                               std::optional<Point> centre = std::nullopt);

    std::size_t dim() const { return centre.size(); }
    void validate() const;

    /// L(z).
    double score(std::span<const double> z) const;
};

/// Throws std::invalid_argument on a dimension mismatch.
Label classify(const ClassifierModel& model, std::span<const double> z);

/// The same classifier as a Fisher discriminant: Y iff
/// (z - mu, mu - c) >= theta + offset, with mu the mean of the y_i and
/// offset = mean |y_i|^2 - |mu|^2.
struct FisherForm {
    Point mu;
    double offset = 0.0;
    double theta = 0.0;
    Point centre;

    Label classify(std::span<const double> z) const;
};

FisherForm fisher_form(const ClassifierModel& model);

struct LearningBounds {
    double lower = 0.0;
    double upper = 1.0;
};

enum class LearnSide { learn_Y, learn_X };

/// Bounds on the success probability in terms of the pairwise separation
/// probability p: p_theta(Y) for learn_Y, p_theta(Y, X) for learn_X.
LearningBounds learning_bounds(double p, int k_train, LearnSide side);

struct LearningSimResult {
    ProbEstimate y_success;  // P(F(y) = Y), y ~ Y
    ProbEstimate x_success;  // P(F(x) = X), x ~ X
};

/// Each trial draws k_train fresh training points from Y, then one evaluation
/// point from Y and one from X, and scores both against the same training set.
LearningSimResult simulate_learning(const BallSpec& y_ball, const BallSpec& x_ball,
                                    std::span<const double> centre, double theta, int k_train,
                                    std::uint64_t trials, std::uint64_t seed, double confidence = 0.95,
                                    Execution exec = Execution::parallel);

}  // namespace reldim
