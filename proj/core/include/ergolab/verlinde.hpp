#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ergolab {

/// dim V_p for a genus-g surface. For even p this is
///   (p/4)^(g-1) * sum_{j=1}^{p/2-1} sin(2 pi j / p)^(2-2g)
/// rounded to the nearest integer; the sum is evaluated in extended
/// precision and the rounding must land within 1e-6 of an integer or an
/// IntegralityError is thrown (a miss signals a convention bug, not
/// roundoff). For odd p the variant sums sin(4 pi j / p)^(2-2g) over
/// j = 1 .. (p-1)/2; it passes the same integrality gate but the odd-level
/// convention differs between sources, so treat those values as
/// provisional. Requires p >= 3, g >= 0.
std::int64_t verlinde_dim(int genus, std::int64_t p);

/// One character class of the level-4r decomposition.
struct SpinEntry {
    std::string char_class;  // "zero" / "nonzero" (r odd), "arf0" / "arf1" (r even)
    int arf = 0;
    bool includes_zero = false;
    std::int64_t multiplicity = 0;
    std::int64_t dimension = 0;
};

/// Dimensions of the character-indexed summands at level N = 4r.
/// r odd:  dim(nonzero) = (D - r^(g-1)) / 2^(2g),  dim(zero) = dim(nonzero) + r^(g-1)
/// r even: dim = (D + r^(g-1)((-1)^arf 2^g - 1)) / 2^(2g), classes counted by
/// Arf invariant: 2^(g-1)(2^g + 1) with arf 0 (the trivial character among
/// them) and 2^(g-1)(2^g - 1) with arf 1.
/// All divisions must be exact and all dimensions nonnegative; the
/// multiplicity-weighted dimensions must add up to D = verlinde_dim(g, 4r)
/// exactly, or the construction throws.
struct SpinDimensionTable {
    int genus = 0;
    std::int64_t r = 0;
    std::int64_t level = 0;  // 4r
    std::int64_t total = 0;
    std::vector<SpinEntry> entries;

    bool partition_ok() const;
};

SpinDimensionTable spin_dimension_table(int genus, std::int64_t r);

/// estimates[k] = verlinde_dim(g, 4 r_k) / (4 r_k)^(3g-3): converges to the
/// leading growth coefficient. ratios[k] = dim of a nonzero-character
/// summand over the total: converges to 2^-2g.
struct AsymptoticsResult {
    std::vector<std::int64_t> r_values;
    std::vector<double> estimates;
    std::vector<double> ratios;
};

AsymptoticsResult asymptotic_volume_estimate(int genus,
                                             const std::vector<std::int64_t>& r_values);

} // namespace ergolab
