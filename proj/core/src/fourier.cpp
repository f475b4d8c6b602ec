#include "ergolab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ergolab/errors.hpp"

namespace ergolab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;  // floor rounding at the boundary
    return r;
}
} // namespace

TorusPoint::TorusPoint(double t1, double t2)
    : theta1(reduce_mod1(t1)), theta2(reduce_mod1(t2)) {}

FourierObservable FourierObservable::constant(Complex c) {
    return monomial(0, 0, c);
}

FourierObservable FourierObservable::monomial(std::int64_t a, std::int64_t b, Complex c) {
    FourierObservable f;
    f.add_term(a, b, c);
    return f;
}

void FourierObservable::add_term(std::int64_t a, std::int64_t b, Complex c) {
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

Complex FourierObservable::coefficient(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Complex{} : it->second;
}

std::int64_t FourierObservable::max_degree() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max({d, std::abs(e.a), std::abs(e.b)});
    return d;
}

bool FourierObservable::is_real_valued() const {
    for (const auto& [e, c] : terms_) {
        Complex mirror = coefficient(-e.a, -e.b);
        double scale = std::max(1.0, std::abs(c));
        if (std::abs(mirror - std::conj(c)) > 1e-12 * scale) return false;
    }
    return true;
}

FourierObservable FourierObservable::pruned(double tol) const {
    FourierObservable out;
    for (const auto& [e, c] : terms_)
        if (std::abs(c) > tol) out.terms_.emplace(e, c);
    return out;
}

FourierObservable FourierObservable::operator+(const FourierObservable& o) const {
    FourierObservable out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e.a, e.b, c);
    return out;
}

FourierObservable FourierObservable::operator-(const FourierObservable& o) const {
    FourierObservable out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e.a, e.b, -c);
    return out;
}

FourierObservable FourierObservable::operator*(Complex s) const {
    FourierObservable out;
    if (s == Complex{}) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

double FourierObservable::coefficient_distance(const FourierObservable& o) const {
    double d = 0.0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::abs(c - o.coefficient(e.a, e.b)));
    for (const auto& [e, c] : o.terms_) d = std::max(d, std::abs(c - coefficient(e.a, e.b)));
    return d;
}

std::string FourierObservable::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        if (e.a != 0) os << " X^" << e.a;
        if (e.b != 0) os << " Y^" << e.b;
    }
    return os.str();
}

Complex evaluate(const FourierObservable& f, const TorusPoint& p) {
    Complex sum{};
    for (const auto& [e, c] : f.terms()) {
        double phase = kTwoPi * (static_cast<double>(e.a) * p.theta1 +
                                 static_cast<double>(e.b) * p.theta2);
        sum += c * Complex{std::cos(phase), std::sin(phase)};
    }
    return sum;
}

FourierObservable star_product(const FourierObservable& f, const FourierObservable& g,
                               double hbar) {
    FourierObservable out;
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            double angle = std::numbers::pi * hbar *
                           static_cast<double>(eg.b * ef.a - eg.a * ef.b);
            Complex phase{std::cos(angle), std::sin(angle)};
            out.add_term(ef.a + eg.a, ef.b + eg.b, cf * cg * phase);
        }
    }
    return out;
}

FourierObservable poisson_bracket(const FourierObservable& f, const FourierObservable& g) {
    FourierObservable out;
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            std::int64_t symplectic = ef.a * eg.b - eg.a * ef.b;
            if (symplectic == 0) continue;
            out.add_term(ef.a + eg.a, ef.b + eg.b,
                         cf * cg * (-kTwoPi * static_cast<double>(symplectic)));
        }
    }
    return out;
}

Complex classical_average(const FourierObservable& f) {
    return f.coefficient(0, 0);
}

ExponentPair pullback_exponent(const SL2Matrix& phi, const ExponentPair& e) {
    return {phi.m22 * e.a + phi.m12 * e.b, phi.m21 * e.a + phi.m11 * e.b};
}

FourierObservable pullback_sl2(const FourierObservable& f, const SL2Matrix& phi) {
    if (phi.det() != 1) throw Error("pullback_sl2: determinant must be 1");
    FourierObservable out;
    for (const auto& [e, c] : f.terms()) {
        ExponentPair t = pullback_exponent(phi, e);
        out.add_term(t.a, t.b, c);
    }
    return out;
}

} // namespace ergolab
