#include "ergolab/sl2.hpp"

#include <cstdlib>
#include <sstream>

#include "ergolab/errors.hpp"

namespace ergolab {

namespace {

// Nearest integer to a/c (c != 0); any tie direction keeps |a - qc| <= |c|/2.
std::int64_t div_nearest(std::int64_t a, std::int64_t c) {
    std::int64_t q = a / c;
    std::int64_t r = a - q * c;
    if (r != 0 && std::abs(r) * 2 >= std::abs(c)) {
        q += ((a < 0) == (c < 0)) ? 1 : -1;
    }
    return q;
}

void append_t_power(std::vector<Sl2Letter>& word, std::int64_t k) {
    Sl2Letter l = k > 0 ? Sl2Letter::T : Sl2Letter::TInv;
    for (std::int64_t i = 0; i < std::abs(k); ++i) word.push_back(l);
}

} // namespace

SL2Matrix SL2Matrix::parse(const std::string& text) {
    std::istringstream is(text);
    std::int64_t v[4];
    char sep = ',';
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            is >> sep;
            if (sep != ',') throw Error("SL2Matrix::parse: expected 'm11,m12,m21,m22'");
        }
        if (!(is >> v[i])) throw Error("SL2Matrix::parse: expected 'm11,m12,m21,m22'");
    }
    std::string rest;
    if (is >> rest) throw Error("SL2Matrix::parse: trailing input '" + rest + "'");
    SL2Matrix m{v[0], v[1], v[2], v[3]};
    if (m.det() != 1) throw Error("SL2Matrix::parse: determinant is " +
                                  std::to_string(m.det()) + ", must be 1");
    return m;
}

std::string SL2Matrix::str() const {
    std::ostringstream os;
    os << "[[" << m11 << "," << m12 << "],[" << m21 << "," << m22 << "]]";
    return os.str();
}

bool is_anosov(const SL2Matrix& phi) {
    if (phi.det() != 1) throw Error("is_anosov: determinant must be 1");
    return std::abs(phi.m11 + phi.m22) > 2;
}

Sl2Letter letter_inverse(Sl2Letter l) {
    switch (l) {
        case Sl2Letter::S: return Sl2Letter::SInv;
        case Sl2Letter::SInv: return Sl2Letter::S;
        case Sl2Letter::T: return Sl2Letter::TInv;
        case Sl2Letter::TInv: return Sl2Letter::T;
    }
    return Sl2Letter::S;
}

SL2Matrix letter_matrix(Sl2Letter l) {
    switch (l) {
        case Sl2Letter::S: return SL2Matrix::gen_s();
        case Sl2Letter::SInv: return SL2Matrix::gen_s().inverse();
        case Sl2Letter::T: return SL2Matrix::gen_t();
        case Sl2Letter::TInv: return SL2Matrix::gen_t().inverse();
    }
    return SL2Matrix::identity();
}

char letter_char(Sl2Letter l) {
    switch (l) {
        case Sl2Letter::S: return 'S';
        case Sl2Letter::SInv: return 's';
        case Sl2Letter::T: return 'T';
        case Sl2Letter::TInv: return 't';
    }
    return '?';
}

SL2Word::SL2Word(SL2Matrix src, std::vector<Sl2Letter> ltrs)
    : source(src), letters(std::move(ltrs)) {
    if (product() != source)
        throw Error("SL2Word: letter product does not reproduce the source matrix");
}

SL2Matrix SL2Word::product() const {
    SL2Matrix p = SL2Matrix::identity();
    for (Sl2Letter l : letters) p = p * letter_matrix(l);
    return p;
}

std::string SL2Word::str() const {
    std::string s;
    s.reserve(letters.size());
    for (Sl2Letter l : letters) s.push_back(letter_char(l));
    return s;
}

SL2Word decompose_sl2(const SL2Matrix& phi) {
    if (phi.det() != 1)
        throw Error("decompose_sl2: determinant is " + std::to_string(phi.det()) +
                    ", must be 1");

    // Reduce phi to the identity by left multiplications with generator
    // letters; the word is then the inverses of the reduction letters in
    // application order.
    std::vector<Sl2Letter> reduction;
    SL2Matrix r = phi;
    auto apply = [&](Sl2Letter l) {
        r = letter_matrix(l) * r;
        reduction.push_back(l);
    };

    while (r.m21 != 0) {
        std::int64_t q = div_nearest(r.m11, r.m21);
        if (q != 0) {
            // T^q subtracts q times the second row from the first
            SL2Matrix tq{1, -q, 0, 1};
            r = tq * r;
            append_t_power(reduction, q);
        }
        apply(Sl2Letter::S);
    }
    // r is now upper triangular with unit diagonal, up to sign.
    if (r.m11 == 1) {
        if (r.m12 != 0) append_t_power(reduction, r.m12), r = SL2Matrix{1, -r.m12, 0, 1} * r;
    } else {
        // r = [[-1, b], [0, -1]] = S^2 T^{b}; clear b then undo S^2
        if (r.m12 != 0) append_t_power(reduction, -r.m12), r = SL2Matrix{1, r.m12, 0, 1} * r;
        apply(Sl2Letter::SInv);
        apply(Sl2Letter::SInv);
    }

    // Free cancellation keeps words like S from coming back as S^-1 S S.
    std::vector<Sl2Letter> word;
    word.reserve(reduction.size());
    for (Sl2Letter l : reduction) {
        Sl2Letter g = letter_inverse(l);
        if (!word.empty() && word.back() == letter_inverse(g)) {
            word.pop_back();
        } else {
            word.push_back(g);
        }
    }
    return SL2Word(phi, std::move(word));
}

} // namespace ergolab
