#pragma once

#include <vector>

#include "reldim/dimension.hpp"
#include "reldim/geometry.hpp"
#include "reldim/quadrature.hpp"

namespace reldim {

/// Separability in the feature space of the polynomial kernel, for x, y ~
/// U(B_d) and the centre fixed at the feature-space mean of U(B_d).
struct PolyQuery {
    KernelSpec spec;
    double theta = 0.0;

    /// Requires deg >= 1 and bias >= 1.
    void validate() const;
};

/// q(s) = E_z (b^2 + x.z)^deg for |x| = s and z ~ U(B_d): the inner product
/// of phi(x) with the feature-space mean.
double q_mean_kernel(double s, const PolyQuery& query);

/// Threshold Q(s, t) on cos(angle(x, y)) for |x| = s, |y| = t. Returns -inf
/// when the event holds for every angle and +inf when it never does.
double decision_threshold(double s, double t, const PolyQuery& query);

QuadSpec default_poly_spec();

/// P((phi(x) - phi(y), phi(y) - c) >= theta) as the double radial integral of
/// the spherical-cap area fraction at Q(s, t).
QuadResult poly_sep_prob(const PolyQuery& query, const QuadSpec& spec = default_poly_spec(),
                         Execution exec = Execution::parallel);

struct PolyDimension {
    DimensionValue dim;
    QuadResult prob;
};

PolyDimension poly_intrinsic_dim(const KernelSpec& spec, const QuadSpec& quad = default_poly_spec(),
                                 Execution exec = Execution::parallel);

struct DegreeRow {
    int deg = 1;
    double p0 = 0.0;
    double intrinsic_dim = 0.0;
    bool converged = true;
};

struct DegreeSweep {
    int best_degree = 1;
    std::vector<DegreeRow> rows;

    bool converged() const;
};

/// poly_intrinsic_dim for deg = 1..deg_max; ties go to the smaller degree.
DegreeSweep optimal_degree(int d, double bias, int deg_max, const QuadSpec& quad = default_poly_spec(),
                           Execution exec = Execution::parallel);

}  // namespace reldim
