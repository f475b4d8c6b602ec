#include "ergolab/verlinde.hpp"

#include <cmath>
#include <sstream>

#include "ergolab/errors.hpp"

#if defined(ERGOLAB_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace ergolab {

namespace {

// The g = 6, p = 60 value is near 1e16, beyond exact double range; the
// sums are evaluated in binary128 where available so the integrality gate
// measures the formula, not the arithmetic.
#if defined(ERGOLAB_HAVE_QUADMATH)
using Wide = __float128;
inline Wide wide_pi() { return M_PIq; }
inline Wide wide_sin(Wide x) { return sinq(x); }
inline Wide wide_pow(Wide x, int k) {
    Wide r = 1;
    bool inv = k < 0;
    for (int i = 0; i < (inv ? -k : k); ++i) r *= x;
    return inv ? 1 / r : r;
}
inline Wide wide_rint(Wide x) { return rintq(x); }
inline Wide wide_abs(Wide x) { return fabsq(x); }
#else
using Wide = long double;
inline Wide wide_pi() { return 3.14159265358979323846264338327950288L; }
inline Wide wide_sin(Wide x) { return std::sin(x); }
inline Wide wide_pow(Wide x, int k) {
    Wide r = 1;
    bool inv = k < 0;
    for (int i = 0; i < (inv ? -k : k); ++i) r *= x;
    return inv ? 1 / r : r;
}
inline Wide wide_rint(Wide x) { return std::rint(x); }
inline Wide wide_abs(Wide x) { return std::fabs(x); }
#endif

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace

std::int64_t verlinde_dim(int genus, std::int64_t p) {
    if (genus < 0) throw Error("verlinde_dim: genus must be nonnegative");
    if (p < 3) throw Error("verlinde_dim: level must be >= 3");
    if (p > 100000) throw Error("verlinde_dim: level too large");

    const int spow = 2 - 2 * genus;
    Wide sum = 0;
    if (p % 2 == 0) {
        for (std::int64_t j = 1; j <= p / 2 - 1; ++j) {
            Wide s = wide_sin(2 * wide_pi() * static_cast<Wide>(j) / static_cast<Wide>(p));
            sum += wide_pow(s, spow);
        }
    } else {
        for (std::int64_t j = 1; j <= (p - 1) / 2; ++j) {
            Wide s = wide_sin(4 * wide_pi() * static_cast<Wide>(j) / static_cast<Wide>(p));
            sum += wide_pow(s, spow);
        }
    }
    Wide value = wide_pow(static_cast<Wide>(p) / 4, genus - 1) * sum;
    if (wide_abs(value) > static_cast<Wide>(4.5e18))
        throw Error("verlinde_dim: value exceeds the integer range");
    Wide rounded = wide_rint(value);
    double deviation = static_cast<double>(wide_abs(value - rounded));
    if (deviation > 1e-6) {
        std::ostringstream os;
        os << "verlinde_dim: value at genus " << genus << ", level " << p
           << " misses an integer by " << deviation << "; formula/convention bug";
        throw IntegralityError(deviation, os.str());
    }
    return static_cast<std::int64_t>(rounded);
}

bool SpinDimensionTable::partition_ok() const {
    std::int64_t sum = 0;
    for (const auto& e : entries) sum += e.multiplicity * e.dimension;
    return sum == total;
}

SpinDimensionTable spin_dimension_table(int genus, std::int64_t r) {
    if (genus < 1) throw Error("spin_dimension_table: genus must be >= 1");
    if (genus > 12) throw Error("spin_dimension_table: genus too large for exact counts");
    if (r < 2) throw Error("spin_dimension_table: r must be >= 2");

    SpinDimensionTable table;
    table.genus = genus;
    table.r = r;
    table.level = 4 * r;
    table.total = verlinde_dim(genus, 4 * r);

    const std::int64_t char_count = ipow(2, 2 * genus);
    const std::int64_t rg = ipow(r, genus - 1);

    auto exact_div = [&](std::int64_t num, const char* what) {
        if (num % char_count != 0) {
            std::ostringstream os;
            os << "spin_dimension_table: " << what << " = " << num << " is not divisible by 2^"
               << 2 * genus << " at genus " << genus << ", r " << r;
            throw IntegralityError(static_cast<double>(num % char_count), os.str());
        }
        std::int64_t q = num / char_count;
        if (q < 0) {
            std::ostringstream os;
            os << "spin_dimension_table: negative dimension at genus " << genus << ", r " << r;
            throw Error(os.str());
        }
        return q;
    };

    if (r % 2 == 1) {
        std::int64_t dim_nonzero = exact_div(table.total - rg, "total - r^(g-1)");
        std::int64_t dim_zero = dim_nonzero + rg;
        table.entries.push_back({"zero", 0, true, 1, dim_zero});
        table.entries.push_back({"nonzero", 0, false, char_count - 1, dim_nonzero});
    } else {
        std::int64_t dim_arf0 = exact_div(table.total + rg * (ipow(2, genus) - 1), "arf-0 numerator");
        std::int64_t dim_arf1 = exact_div(table.total + rg * (-ipow(2, genus) - 1), "arf-1 numerator");
        std::int64_t count_arf0 = ipow(2, genus - 1) * (ipow(2, genus) + 1);
        std::int64_t count_arf1 = ipow(2, genus - 1) * (ipow(2, genus) - 1);
        table.entries.push_back({"arf0", 0, true, count_arf0, dim_arf0});
        table.entries.push_back({"arf1", 1, false, count_arf1, dim_arf1});
    }

    if (!table.partition_ok())
        throw Error("spin_dimension_table: partition identity failed at genus " +
                    std::to_string(genus) + ", r " + std::to_string(r));
    return table;
}

AsymptoticsResult asymptotic_volume_estimate(int genus,
                                             const std::vector<std::int64_t>& r_values) {
    if (genus < 1) throw Error("asymptotic_volume_estimate: genus must be >= 1");
    if (r_values.empty()) throw Error("asymptotic_volume_estimate: empty r list");
    for (std::size_t i = 0; i < r_values.size(); ++i) {
        if (r_values[i] < 2) throw Error("asymptotic_volume_estimate: r must be >= 2");
        if (i > 0 && r_values[i] <= r_values[i - 1])
            throw Error("asymptotic_volume_estimate: r values must be increasing");
    }

    AsymptoticsResult res;
    res.r_values = r_values;
    for (std::int64_t r : r_values) {
        SpinDimensionTable t = spin_dimension_table(genus, r);
        double denom = std::pow(4.0 * static_cast<double>(r), 3.0 * genus - 3.0);
        res.estimates.push_back(static_cast<double>(t.total) / denom);
        std::int64_t dim_nonzero =
            (r % 2 == 1) ? t.entries[1].dimension : t.entries[0].dimension;
        res.ratios.push_back(static_cast<double>(dim_nonzero) /
                             static_cast<double>(t.total));
    }
    return res;
}

} // namespace ergolab
