#include "ergolab/separating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ergolab/errors.hpp"

namespace ergolab {

namespace {

// Affine minimizer of ||P_S beta|| subject to sum(beta) = 1, via the
// bordered normal equations [G 1; 1^T 0] [beta; mu] = [0; 1].
VectorR affine_minimizer(const MatrixR& ps) {
    const int m = static_cast<int>(ps.cols());
    MatrixR kkt = MatrixR::Zero(m + 1, m + 1);
    kkt.topLeftCorner(m, m) = ps.transpose() * ps;
    kkt.topRightCorner(m, 1).setOnes();
    kkt.bottomLeftCorner(1, m).setOnes();
    VectorR rhs = VectorR::Zero(m + 1);
    rhs(m) = 1.0;
    VectorR sol = kkt.fullPivLu().solve(rhs);
    return sol.head(m);
}

} // namespace

VectorR min_norm_point(const MatrixR& points, VectorR* coeffs, double tol) {
    const int m = static_cast<int>(points.cols());
    const int d = static_cast<int>(points.rows());
    if (m == 0) throw Error("min_norm_point: empty point set");

    double scale = 1.0;
    for (int j = 0; j < m; ++j) scale = std::max(scale, points.col(j).squaredNorm());

    // Wolfe's algorithm: maintain a corral S with convex coefficients.
    std::vector<int> corral;
    int start = 0;
    for (int j = 1; j < m; ++j)
        if (points.col(j).squaredNorm() < points.col(start).squaredNorm()) start = j;
    corral.push_back(start);
    VectorR lambda = VectorR::Ones(1);
    VectorR x = points.col(start);

    const int max_major = 16 * m + 64;
    for (int major = 0; major < max_major; ++major) {
        // most violating vertex
        int best = -1;
        double best_dot = x.squaredNorm() - tol * scale;
        for (int j = 0; j < m; ++j) {
            double dot = x.dot(points.col(j));
            if (dot < best_dot) best_dot = dot, best = j;
        }
        if (best < 0) break;  // min_j <x, p_j> >= ||x||^2 - tol: optimal
        if (std::find(corral.begin(), corral.end(), best) != corral.end()) break;

        corral.push_back(best);
        VectorR lam_ext(corral.size());
        lam_ext.head(lambda.size()) = lambda;
        lam_ext(lambda.size()) = 0.0;
        lambda = lam_ext;

        for (int minor = 0; minor < max_major; ++minor) {
            MatrixR ps(d, corral.size());
            for (std::size_t k = 0; k < corral.size(); ++k) ps.col(k) = points.col(corral[k]);
            VectorR beta = affine_minimizer(ps);
            if (beta.minCoeff() > 1e-14) {
                lambda = beta;
                x = ps * lambda;
                break;
            }
            // step toward beta until the first coefficient hits zero
            double theta = 1.0;
            for (int k = 0; k < beta.size(); ++k) {
                if (beta(k) <= 1e-14) {
                    double denom = lambda(k) - beta(k);
                    if (denom > 0) theta = std::min(theta, lambda(k) / denom);
                }
            }
            lambda = (1.0 - theta) * lambda + theta * beta;
            // drop vanished vertices
            std::vector<int> keep;
            std::vector<double> keep_lam;
            for (int k = 0; k < lambda.size(); ++k) {
                if (lambda(k) > 1e-14) {
                    keep.push_back(corral[k]);
                    keep_lam.push_back(lambda(k));
                }
            }
            if (keep.empty()) {  // numerical corner: keep the largest
                int arg = 0;
                lambda.maxCoeff(&arg);
                keep.push_back(corral[arg]);
                keep_lam.push_back(1.0);
            }
            corral = keep;
            lambda = Eigen::Map<VectorR>(keep_lam.data(), keep_lam.size());
            lambda /= lambda.sum();
            MatrixR ps2(d, corral.size());
            for (std::size_t k = 0; k < corral.size(); ++k) ps2.col(k) = points.col(corral[k]);
            x = ps2 * lambda;
        }
    }

    if (coeffs) {
        VectorR full = VectorR::Zero(m);
        for (std::size_t k = 0; k < corral.size(); ++k) full(corral[k]) = lambda(k);
        *coeffs = full;
    }
    return x;
}

VectorR stack_state(const State& s) {
    VectorR v(2 * s.values.size());
    for (int i = 0; i < s.values.size(); ++i) {
        v(2 * i) = s.values(i).real();
        v(2 * i + 1) = s.values(i).imag();
    }
    return v;
}

double SeparatingFunctional::evaluate(const State& s) const {
    VectorR v = stack_state(s);
    if (v.size() != coefficients.size())
        throw Error("SeparatingFunctional: state dimension mismatch");
    return coefficients.dot(v);
}

namespace {

double weighted_dual_norm(const VectorR& coefficients) {
    double worst = 0.0;
    for (int n = 0; 2 * n + 1 < coefficients.size(); ++n) {
        double pair = std::hypot(coefficients(2 * n), coefficients(2 * n + 1));
        worst = std::max(worst, std::ldexp(pair, n + 1));  // 2^(n+1), 1-based entry weights
    }
    return worst;
}

} // namespace

SeparatingFunctional find_separating_functional(const WeightedCloud& cloud,
                                                const State& target) {
    const int m = static_cast<int>(cloud.points.size());
    VectorR t = stack_state(target);
    MatrixR diffs(t.size(), m);
    for (int j = 0; j < m; ++j) {
        diffs.col(j) = stack_state(cloud.points[j]) - t;
        if (diffs.col(j).norm() == 0.0)
            throw Error("find_separating_functional: target equals cloud point " +
                        std::to_string(j));
    }

    VectorR w = min_norm_point(diffs, nullptr);
    double margin = w.norm();
    if (margin <= 1e-9) {
        std::ostringstream os;
        os << "find_separating_functional: target lies within " << margin
           << " of the cloud's convex hull; no separating functional exists";
        throw NotExposedError(margin, os.str());
    }

    SeparatingFunctional l;
    l.coefficients = w;
    // gauge: absorb L(target) into the constant entry so that a = 0;
    // the constant coordinate never contributes to distances between
    // normalized states, so the Lipschitz pairing is untouched.
    double a_raw = w.dot(t);
    l.coefficients(0) -= a_raw;
    l.a = l.evaluate(target);
    double min_point = std::numeric_limits<double>::infinity();
    for (const State& p : cloud.points) min_point = std::min(min_point, l.evaluate(p));
    l.c = 0.5 * (l.a + min_point);
    l.norm = weighted_dual_norm(l.coefficients);
    if (!(l.a < l.c && l.c < min_point))
        throw Error("find_separating_functional: separation invariant failed");
    return l;
}

double lemma_bound(const SeparatingFunctional& l, double eps, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw Error("lemma_bound: delta must be in (0,1)");
    if (!(eps > 0.0)) throw Error("lemma_bound: eps must be positive");
    if (!(l.norm > 0.0)) throw Error("lemma_bound: functional has zero norm");
    double value = ((1.0 - delta) * l.c - l.a) / l.norm;
    if (value <= 0.0) {
        std::ostringstream os;
        os << "lemma_bound: degenerate bound " << value
           << " (threshold too close to the target value)";
        throw DegenerateBoundError(value, os.str());
    }
    return value;
}

double slab_radius(const WeightedCloud& cloud, const State& target,
                   const SeparatingFunctional& l, double c) {
    // Vertices of {x in hull : L(x) <= c} lie among: the target, cloud
    // points inside the slab, and threshold crossings of segments between
    // hull generators. Crossings over all pairs form a superset of the
    // true edge crossings, so the maximum distance below is a verified
    // covering radius.
    double lt = l.evaluate(target);
    if (lt > c) throw Error("slab_radius: target is outside the slab");
    double radius = 0.0;

    const int m = static_cast<int>(cloud.points.size());
    std::vector<double> lv(m);
    std::vector<double> dist(m);
    for (int i = 0; i < m; ++i) {
        lv[i] = l.evaluate(cloud.points[i]);
        dist[i] = state_distance(target, cloud.points[i]);
        if (lv[i] <= c) radius = std::max(radius, dist[i]);
    }
    auto crossing = [&](double la, double da, double lb, double db) {
        // segment from value la (inside) to lb (outside); distance to the
        // target is convex along the segment, bounded by the chord.
        double s = (c - la) / (lb - la);
        radius = std::max(radius, (1.0 - s) * da + s * db);
    };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (lv[i] <= c && lv[j] > c) crossing(lv[i], dist[i], lv[j], dist[j]);
        }
        if (lt <= c && lv[i] > c) crossing(lt, 0.0, lv[i], dist[i]);
    }
    return radius;
}

} // namespace ergolab
