#pragma once

#include <Eigen/Dense>

#include "ergolab/states.hpp"

namespace ergolab {

using MatrixR = Eigen::MatrixXd;
using VectorR = Eigen::VectorXd;

/// Minimum-norm point of the convex hull of the columns of `points`
/// (Wolfe's algorithm, exact affine solves on the active corral).
/// Returns the point; if `coeffs` is non-null it receives the convex
/// coefficients.
VectorR min_norm_point(const MatrixR& points, VectorR* coeffs = nullptr,
                       double tol = 1e-12);

/// Linear functional on the stacked real/imaginary evaluation
/// coordinates of a state: L(s) = sum_n (re_n, im_n) . coefficient pair n.
/// Invariant: L(target) = a < c < min_i L(point_i) for the cloud it was
/// built from; norm is the dual of the weighted l1 metric,
/// max_n 2^n |pair_n|_2.
struct SeparatingFunctional {
    VectorR coefficients;  // interleaved (re_1, im_1, re_2, im_2, ...)
    double norm = 0.0;
    double a = 0.0;
    double c = 0.0;

    double evaluate(const State& s) const;
};

/// Maximum-margin separator between the target and the cloud points,
/// computed from the minimum-norm point of the shifted hull; the
/// hyperplane threshold c is the midpoint of the margin. The additive
/// gauge is fixed through the constant family entry so that a = 0; that
/// normalization is what makes the stored thresholds directly usable in
/// lemma_bound. Throws NotExposedError when the target lies in (or within
/// 1e-9 of) the hull.
SeparatingFunctional find_separating_functional(const WeightedCloud& cloud,
                                                const State& target);

/// Concentration radius ((1-delta) c - a) / ||L||. Requires 0 < delta < 1
/// and eps > 0; eps must have been chosen by the caller so that the slab
/// {L <= c} of the joint hull sits inside the eps-ball around the target
/// (see slab_radius). Throws DegenerateBoundError when the value is
/// nonpositive.
double lemma_bound(const SeparatingFunctional& l, double eps, double delta);

/// Smallest verified radius r such that {x in hull(target, points):
/// L(x) <= c} is contained in the ball B(target, r): maximum distance from
/// the target over the slab's vertex superset (points inside the slab plus
/// all segment crossings of the threshold). Using eps >= slab_radius
/// makes lemma_bound's precondition hold.
double slab_radius(const WeightedCloud& cloud, const State& target,
                   const SeparatingFunctional& l, double c);

/// Stacks a state's values as (re_1, im_1, re_2, im_2, ...).
VectorR stack_state(const State& s);

} // namespace ergolab
