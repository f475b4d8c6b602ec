#pragma once

#include <vector>

#include "ergolab/states.hpp"
#include "ergolab/weil.hpp"

namespace ergolab {

struct EigenBlock {
    Complex eigenvalue;  // unit modulus, cluster representative
    MatrixC basis;       // N x dim, orthonormal columns
    int dimension() const { return static_cast<int>(basis.cols()); }
};

/// Eigenspace decomposition of a unitary operator, eigenvalues clustered
/// by circular (phase arc) distance <= cluster_tol, blocks ordered by
/// phase in [0, 2pi).
struct EigenspaceDecomposition {
    std::vector<EigenBlock> blocks;
    double cluster_tol = 1e-8;
};

/// Numerical spectral theorem for a unitary matrix via its Schur form.
/// Rejects non-unitary input (||U^dag U - I||_F > 1e-8). The result
/// satisfies: block dimensions sum to N, bases are mutually orthonormal,
/// ||U v - lambda v|| <= 10 cluster_tol on basis vectors, and
/// ||U - sum lambda_i P_i||_F <= 10 cluster_tol.
EigenspaceDecomposition spectral_decomposition(const QuantumOperator& u,
                                               double cluster_tol = 1e-8);

struct BlockSummary {
    int block_index = 0;
    Complex eigenvalue;
    int dimension = 0;
    double distance = 0.0;  // to the classical state
    VectorC state_values;
};

struct ErgodicityRecord {
    int n = 0;
    double eps = 0.0;
    double weighted_fraction_within_eps = 0.0;
    double barycenter_distance = 0.0;
    double family_tail_weight = 0.0;
    std::vector<BlockSummary> blocks;            // all blocks, by phase
    std::vector<BlockSummary> outliers() const;  // blocks with distance > eps
};

/// For each N: decompose rho(phi) into eigenblocks, evaluate each block's
/// state on the family, and measure the dimension-weighted concentration
/// around the classical state. Requires an Anosov phi and eps > 0.
std::vector<ErgodicityRecord> ergodicity_report(const SL2Matrix& phi,
                                                const std::vector<int>& n_values,
                                                std::shared_ptr<const TestFamily> family,
                                                double eps);

struct ScarEntry {
    int n = 0;
    int block_index = 0;
    Complex eigenvalue;
    int dimension = 0;
    double distance = 0.0;
    VectorC state_values;
};

/// All blocks at distance > threshold from the classical state, flattened
/// over the records and sorted by distance descending.
std::vector<ScarEntry> scar_outliers(const std::vector<ErgodicityRecord>& records,
                                     double threshold);

} // namespace ergolab
