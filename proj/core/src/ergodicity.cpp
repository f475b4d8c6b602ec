#include "ergolab/ergodicity.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "ergolab/errors.hpp"
#include "ergolab/parallel.hpp"

namespace ergolab {

namespace {

double phase_in_2pi(Complex z) {
    double p = std::arg(z);
    if (p < 0) p += 2.0 * std::numbers::pi;
    if (p >= 2.0 * std::numbers::pi) p = 0.0;
    return p;
}

double circular_gap(double p1, double p2) {
    double d = std::abs(p1 - p2);
    return std::min(d, 2.0 * std::numbers::pi - d);
}

} // namespace

EigenspaceDecomposition spectral_decomposition(const QuantumOperator& u, double cluster_tol) {
    const int n = static_cast<int>(u.matrix.rows());
    if (u.matrix.cols() != n) throw Error("spectral_decomposition: matrix must be square");
    double udev = (u.matrix.adjoint() * u.matrix - MatrixC::Identity(n, n)).norm();
    if (udev > 1e-8) {
        std::ostringstream os;
        os << "spectral_decomposition: input is not unitary, ||U^dag U - I||_F = " << udev;
        throw Error(os.str());
    }
    if (cluster_tol <= 0) throw Error("spectral_decomposition: cluster_tol must be positive");

    // A unitary matrix is normal, so its Schur form is diagonal up to
    // roundoff and the Schur vectors are an orthonormal eigenbasis.
    Eigen::ComplexSchur<MatrixC> schur(u.matrix);
    if (schur.info() != Eigen::Success)
        throw Error("spectral_decomposition: Schur iteration failed");
    const MatrixC& t = schur.matrixT();
    const MatrixC& q = schur.matrixU();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> phases(n);
    for (int i = 0; i < n; ++i) phases[i] = phase_in_2pi(t(i, i));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return phases[a] < phases[b] || (phases[a] == phases[b] && a < b);
    });

    // sweep clustering on sorted phases, then merge across the wrap
    std::vector<std::vector<int>> clusters;
    for (int idx : order) {
        if (!clusters.empty() &&
            circular_gap(phases[clusters.back().back()], phases[idx]) <= cluster_tol) {
            clusters.back().push_back(idx);
        } else {
            clusters.push_back({idx});
        }
    }
    if (clusters.size() > 1) {
        double wrap = circular_gap(phases[clusters.back().back()], phases[clusters.front().front()]);
        if (wrap <= cluster_tol) {
            auto& front = clusters.front();
            front.insert(front.begin(), clusters.back().begin(), clusters.back().end());
            clusters.pop_back();
        }
    }

    EigenspaceDecomposition dec;
    dec.cluster_tol = cluster_tol;
    for (const auto& members : clusters) {
        EigenBlock block;
        Complex mean{};
        for (int idx : members) mean += t(idx, idx);
        block.eigenvalue = mean / std::abs(mean);
        block.basis = MatrixC(n, members.size());
        for (std::size_t k = 0; k < members.size(); ++k) block.basis.col(k) = q.col(members[k]);
        dec.blocks.push_back(std::move(block));
    }
    std::sort(dec.blocks.begin(), dec.blocks.end(), [](const EigenBlock& a, const EigenBlock& b) {
        return phase_in_2pi(a.eigenvalue) < phase_in_2pi(b.eigenvalue);
    });

    // invariant checks: completeness, eigenvector residuals, reconstruction
    int total = 0;
    MatrixC recon = MatrixC::Zero(n, n);
    for (const auto& block : dec.blocks) {
        total += block.dimension();
        for (int k = 0; k < block.dimension(); ++k) {
            double res = (u.matrix * block.basis.col(k) - block.eigenvalue * block.basis.col(k))
                             .norm();
            if (res > 10.0 * cluster_tol + 1e-10)
                throw Error("spectral_decomposition: eigenvector residual " +
                            std::to_string(res) + " exceeds tolerance");
        }
        recon += block.eigenvalue * (block.basis * block.basis.adjoint());
    }
    if (total != n) throw Error("spectral_decomposition: block dimensions do not sum to N");
    double rdev = (u.matrix - recon).norm();
    if (rdev > 10.0 * cluster_tol + 1e-9)
        throw Error("spectral_decomposition: reconstruction defect " + std::to_string(rdev));
    return dec;
}

std::vector<BlockSummary> ErgodicityRecord::outliers() const {
    std::vector<BlockSummary> out;
    for (const auto& b : blocks)
        if (b.distance > eps) out.push_back(b);
    return out;
}

std::vector<ErgodicityRecord> ergodicity_report(const SL2Matrix& phi,
                                                const std::vector<int>& n_values,
                                                std::shared_ptr<const TestFamily> family,
                                                double eps) {
    if (!is_anosov(phi))
        throw Error("ergodicity_report: " + phi.str() + " is not Anosov (|trace| <= 2)");
    if (eps <= 0) throw Error("ergodicity_report: eps must be positive");

    std::vector<ErgodicityRecord> records(n_values.size());
    parallel_for(n_values.size(), [&](std::size_t k) {
        const int n = n_values[k];
        QuantizationContext ctx = QuantizationContext::make(n);
        WeilOperator u = rho(ctx, phi);
        EigenspaceDecomposition dec = spectral_decomposition({ctx, u.matrix});

        State classical = classical_state(family);
        std::vector<State> block_states;
        std::vector<double> weights;
        block_states.reserve(dec.blocks.size());
        for (const auto& block : dec.blocks) {
            block_states.push_back(evaluate_subspace_state(ctx, block.basis, family));
            weights.push_back(static_cast<double>(block.dimension()) / n);
        }
        // weights are dim/N with exact total N, but guard the convex gate
        double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
        for (double& w : weights) w /= wsum;
        WeightedCloud cloud(block_states, weights);

        ErgodicityRecord rec;
        rec.n = n;
        rec.eps = eps;
        rec.family_tail_weight = family->tail_weight();
        rec.weighted_fraction_within_eps = select_concentrated(cloud, classical, eps).weight;
        rec.barycenter_distance = state_distance(barycenter(cloud), classical);
        for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
            BlockSummary s;
            s.block_index = static_cast<int>(b);
            s.eigenvalue = dec.blocks[b].eigenvalue;
            s.dimension = dec.blocks[b].dimension();
            s.distance = state_distance(block_states[b], classical);
            s.state_values = block_states[b].values;
            rec.blocks.push_back(std::move(s));
        }
        records[k] = std::move(rec);
    });
    return records;
}

std::vector<ScarEntry> scar_outliers(const std::vector<ErgodicityRecord>& records,
                                     double threshold) {
    std::vector<ScarEntry> out;
    for (const auto& rec : records) {
        for (const auto& b : rec.blocks) {
            if (b.distance > threshold) {
                out.push_back({rec.n, b.block_index, b.eigenvalue, b.dimension, b.distance,
                               b.state_values});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ScarEntry& a, const ScarEntry& b) {
        return a.distance > b.distance;
    });
    return out;
}

} // namespace ergolab
