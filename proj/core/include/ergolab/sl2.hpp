#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ergolab {

/// Integer 2x2 matrix with determinant one.
struct SL2Matrix {
    std::int64_t m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    std::int64_t det() const { return m11 * m22 - m12 * m21; }
    bool is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }

    SL2Matrix operator*(const SL2Matrix& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    bool operator==(const SL2Matrix&) const = default;

    SL2Matrix inverse() const { return {m22, -m12, -m21, m11}; }

    static SL2Matrix identity() { return {}; }
    static SL2Matrix gen_t() { return {1, -1, 0, 1}; }
    static SL2Matrix gen_s() { return {0, 1, -1, 0}; }

    /// Parses "m11,m12,m21,m22". Throws Error on malformed input or det != 1.
    static SL2Matrix parse(const std::string& text);
    std::string str() const;
};

/// Anosov criterion: |trace| > 2.
bool is_anosov(const SL2Matrix& phi);

enum class Sl2Letter : std::uint8_t { S, SInv, T, TInv };

Sl2Letter letter_inverse(Sl2Letter l);
SL2Matrix letter_matrix(Sl2Letter l);
char letter_char(Sl2Letter l);

/// A word over {S, S^-1, T, T^-1} whose letter product reproduces
/// `source` exactly in integer arithmetic (checked at construction).
struct SL2Word {
    SL2Word(SL2Matrix source, std::vector<Sl2Letter> letters);

    SL2Matrix source;
    std::vector<Sl2Letter> letters;

    SL2Matrix product() const;
    std::string str() const;
};

/// Generator decomposition by Euclidean reduction of the first column.
/// Word length grows like the number of quotient steps. Requires det = 1.
SL2Word decompose_sl2(const SL2Matrix& phi);

} // namespace ergolab
