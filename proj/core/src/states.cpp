#include "ergolab/states.hpp"

#include <cmath>
#include <sstream>

#include "ergolab/errors.hpp"

namespace ergolab {

std::shared_ptr<const TestFamily> TestFamily::shell_lex(int n_max) {
    if (n_max < 1) throw Error("TestFamily: n_max must be >= 1");
    std::vector<FourierObservable> entries;
    entries.reserve(n_max);
    entries.push_back(FourierObservable::constant(1.0));
    for (std::int64_t shell = 1; static_cast<int>(entries.size()) < n_max; ++shell) {
        for (std::int64_t a = -shell; a <= shell && static_cast<int>(entries.size()) < n_max;
             ++a) {
            for (std::int64_t b = -shell; b <= shell && static_cast<int>(entries.size()) < n_max;
                 ++b) {
                if (std::max(std::abs(a), std::abs(b)) != shell) continue;
                entries.push_back(FourierObservable::monomial(a, b));
            }
        }
    }
    std::ostringstream id;
    id << "shell-lex-" << n_max;
    return std::make_shared<TestFamily>(id.str(), std::move(entries));
}

TestFamily::TestFamily(std::string id, std::vector<FourierObservable> entries)
    : id_(std::move(id)), entries_(std::move(entries)) {
    if (entries_.empty()) throw Error("TestFamily: needs at least one entry");
    if (entries_.front() != FourierObservable::constant(1.0))
        throw Error("TestFamily: first entry must be the constant 1");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[i] == entries_[j])
                throw Error("TestFamily: entries must be pairwise distinct");
}

double TestFamily::weight(int i) const {
    return std::ldexp(1.0, -(i + 1));
}

double TestFamily::tail_weight() const {
    return std::ldexp(1.0, -size());
}

State::State(std::shared_ptr<const TestFamily> fam, VectorC vals)
    : family(std::move(fam)), values(std::move(vals)) {
    if (!family) throw Error("State: missing family");
    if (values.size() != family->size())
        throw Error("State: value count does not match the family");
    if (std::abs(values(0) - Complex{1.0}) > 1e-9)
        throw Error("State: normalization broken, tau(1) != 1");
}

State evaluate_subspace_state(const QuantizationContext& ctx, const MatrixC& basis,
                              std::shared_ptr<const TestFamily> family) {
    VectorC values(family->size());
    for (int i = 0; i < family->size(); ++i)
        values(i) = subspace_state_value(ctx, basis, family->entry(i));
    return State(std::move(family), std::move(values));
}

State classical_state(std::shared_ptr<const TestFamily> family) {
    VectorC values(family->size());
    for (int i = 0; i < family->size(); ++i)
        values(i) = classical_average(family->entry(i));
    return State(std::move(family), std::move(values));
}

namespace {
void require_same_family(const State& s1, const State& s2, const char* where) {
    if (s1.family == s2.family) return;
    if (s1.family->id() == s2.family->id() &&
        s1.family->entries() == s2.family->entries())
        return;
    throw FamilyMismatchError(std::string(where) + ": states use different test families");
}
} // namespace

double state_distance(const State& s1, const State& s2) {
    require_same_family(s1, s2, "state_distance");
    double d = 0.0;
    for (int i = 0; i < s1.family->size(); ++i)
        d += s1.family->weight(i) * std::abs(s1.values(i) - s2.values(i));
    return d;
}

WeightedCloud::WeightedCloud(std::vector<State> pts, std::vector<double> a)
    : points(std::move(pts)), alphas(std::move(a)) {
    if (points.empty()) throw Error("WeightedCloud: needs at least one point");
    if (points.size() != alphas.size())
        throw Error("WeightedCloud: weight count does not match point count");
    double sum = 0.0;
    for (double w : alphas) {
        if (w < 0.0) throw Error("WeightedCloud: weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw Error("WeightedCloud: weights must sum to 1, got " + std::to_string(sum));
    for (std::size_t i = 1; i < points.size(); ++i)
        require_same_family(points[0], points[i], "WeightedCloud");
}

State barycenter(const WeightedCloud& cloud) {
    VectorC values = VectorC::Zero(cloud.points[0].values.size());
    for (std::size_t i = 0; i < cloud.points.size(); ++i)
        values += cloud.alphas[i] * cloud.points[i].values;
    return State(cloud.points[0].family, std::move(values));
}

ConcentrationSelection select_concentrated(const WeightedCloud& cloud, const State& target,
                                           double eps) {
    if (eps <= 0.0) throw Error("select_concentrated: eps must be positive");
    ConcentrationSelection sel;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        if (state_distance(target, cloud.points[i]) <= eps) {
            sel.indices.push_back(static_cast<int>(i));
            sel.weight += cloud.alphas[i];
        }
    }
    return sel;
}

} // namespace ergolab
