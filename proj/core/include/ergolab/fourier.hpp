#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "ergolab/sl2.hpp"

namespace ergolab {

using Complex = std::complex<double>;

/// Exponent pair (a, b) of a Fourier mode X^a Y^b.
struct ExponentPair {
    std::int64_t a = 0, b = 0;
    auto operator<=>(const ExponentPair&) const = default;
};

/// Point on the two-torus in angle coordinates (full turns), reduced mod 1.
struct TorusPoint {
    TorusPoint(double t1, double t2);
    double theta1, theta2;
};

/// Trigonometric polynomial on the two-torus: a finitely supported map
/// from exponent pairs to complex coefficients. Exactly-zero coefficients
/// are never stored; term order is lexicographic in (a, b).
class FourierObservable {
public:
    FourierObservable() = default;

    static FourierObservable constant(Complex c);
    static FourierObservable monomial(std::int64_t a, std::int64_t b, Complex c = 1.0);

    /// Adds c to the (a, b) coefficient, erasing the term if it cancels to zero.
    void add_term(std::int64_t a, std::int64_t b, Complex c);

    Complex coefficient(std::int64_t a, std::int64_t b) const;
    const std::map<ExponentPair, Complex>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Largest |a| or |b| over the support; 0 for the zero observable.
    std::int64_t max_degree() const;

    /// Recomputed on every call: true iff c(-a,-b) == conj(c(a,b)) for all
    /// terms, up to a small roundoff allowance.
    bool is_real_valued() const;

    /// Drops terms with |c| <= tol. Useful after cancellation-heavy arithmetic.
    FourierObservable pruned(double tol) const;

    FourierObservable operator+(const FourierObservable& o) const;
    FourierObservable operator-(const FourierObservable& o) const;
    FourierObservable operator*(Complex s) const;

    /// Largest coefficient modulus difference against `o`.
    double coefficient_distance(const FourierObservable& o) const;

    std::string str() const;

    bool operator==(const FourierObservable&) const = default;

private:
    std::map<ExponentPair, Complex> terms_;
};

/// Sum of c(a,b) exp(2 pi i (a theta1 + b theta2)).
Complex evaluate(const FourierObservable& f, const TorusPoint& p);

/// Deformed product: X^a Y^b * X^a' Y^b' = exp(i pi (b'a - a'b) hbar) X^{a+a'} Y^{b+b'},
/// extended bilinearly.
FourierObservable star_product(const FourierObservable& f, const FourierObservable& g,
                               double hbar);

/// First-order term of the star commutator:
/// {X^a Y^b, X^a' Y^b'} = -2 pi (a b' - a' b) X^{a+a'} Y^{b+b'}.
FourierObservable poisson_bracket(const FourierObservable& f, const FourierObservable& g);

/// Constant Fourier coefficient = normalized integral over the torus.
Complex classical_average(const FourierObservable& f);

/// Exponent action of phi used by composition: (a, b)^t is mapped by
/// [[m22, m12], [m21, m11]] (phi with its diagonal swapped). Conjugation
/// by the Weil operators composes contravariantly, so the exponent action
/// must reverse products; this is the unique linear convention for which
/// the conjugation identity in weil.hpp is exact at every level. It agrees
/// with plain left multiplication by phi whenever m11 == m22, in
/// particular on both generators.
ExponentPair pullback_exponent(const SL2Matrix& phi, const ExponentPair& e);

/// Composition pullback of an observable along phi; coefficients are
/// carried to the transformed exponents. Satisfies
/// pullback_sl2(f, phi*psi) == pullback_sl2(pullback_sl2(f, phi), psi).
FourierObservable pullback_sl2(const FourierObservable& f, const SL2Matrix& phi);

} // namespace ergolab
