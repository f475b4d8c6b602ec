#pragma once

#include <stdexcept>
#include <string>

namespace ergolab {

/// Base class for all ergolab-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A subspace basis failed the orthonormality gate.
struct OrthonormalityError : Error {
    OrthonormalityError(int row, int col, double deviation, const std::string& what)
        : Error(what), row(row), col(col), deviation(deviation) {}
    int row, col;
    double deviation;
};

/// Two states were combined that do not share a test family.
struct FamilyMismatchError : Error {
    using Error::Error;
};

/// No separating functional exists: the target sits in (or within
/// tolerance of) the convex hull of the cloud.
struct NotExposedError : Error {
    NotExposedError(double hull_distance, const std::string& what)
        : Error(what), hull_distance(hull_distance) {}
    double hull_distance;
};

/// The concentration bound came out nonpositive (threshold too close to
/// the target value).
struct DegenerateBoundError : Error {
    DegenerateBoundError(double value, const std::string& what)
        : Error(what), value(value) {}
    double value;
};

/// A dimension formula failed its exact-integrality gate.
struct IntegralityError : Error {
    IntegralityError(double deviation, const std::string& what)
        : Error(what), deviation(deviation) {}
    double deviation;
};

} // namespace ergolab
