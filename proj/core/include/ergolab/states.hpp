#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ergolab/quantize.hpp"

namespace ergolab {

/// Ordered list of test observables f_1, f_2, ... with metric weight 2^-n
/// for the n-th entry (1-based). The first entry is always the constant 1.
class TestFamily {
public:
    /// f_1 = 1, then monomials X^a Y^b enumerated by increasing
    /// max(|a|,|b|) and lexicographically within each shell, truncated at
    /// n_max entries.
    static std::shared_ptr<const TestFamily> shell_lex(int n_max);

    TestFamily(std::string id, std::vector<FourierObservable> entries);

    const std::string& id() const { return id_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const FourierObservable& entry(int i) const { return entries_[i]; }
    const std::vector<FourierObservable>& entries() const { return entries_; }

    /// Metric weight of entry index i (0-based): 2^-(i+1).
    double weight(int i) const;

    /// Bound on the metric mass dropped by truncation: sum of the weights
    /// beyond the last entry, i.e. 2^-size(). Reported alongside distances
    /// by the experiment harnesses.
    double tail_weight() const;

private:
    std::string id_;
    std::vector<FourierObservable> entries_;
};

/// Evaluation of a normalized linear functional on a test family;
/// values[0] must equal 1 (checked to 1e-9 at construction).
struct State {
    State(std::shared_ptr<const TestFamily> family, VectorC values);

    std::shared_ptr<const TestFamily> family;
    VectorC values;
};

/// values[n] = subspace state of the basis evaluated on family entry n.
State evaluate_subspace_state(const QuantizationContext& ctx, const MatrixC& basis,
                              std::shared_ptr<const TestFamily> family);

/// values[n] = classical average of family entry n.
State classical_state(std::shared_ptr<const TestFamily> family);

/// d(s1, s2) = sum_n 2^-n |s1(f_n) - s2(f_n)|, truncated at the family
/// size. Throws FamilyMismatchError unless both states share the family.
double state_distance(const State& s1, const State& s2);

/// Convex-weighted finite set of states over one family.
struct WeightedCloud {
    WeightedCloud(std::vector<State> points, std::vector<double> alphas);

    std::vector<State> points;
    std::vector<double> alphas;
};

/// Componentwise convex combination of the cloud.
State barycenter(const WeightedCloud& cloud);

struct ConcentrationSelection {
    std::vector<int> indices;
    double weight = 0.0;
};

/// Indices within distance eps of the target and their total weight.
ConcentrationSelection select_concentrated(const WeightedCloud& cloud, const State& target,
                                           double eps);

} // namespace ergolab
