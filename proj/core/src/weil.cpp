#include "ergolab/weil.hpp"

#include <cmath>
#include <sstream>

#include "ergolab/errors.hpp"

namespace ergolab {

namespace {

MatrixC t_power_matrix(const QuantizationContext& ctx, std::int64_t k) {
    const int n = ctx.n;
    MatrixC m = MatrixC::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        std::int64_t i = j + 1;
        m(j, j) = ctx.phase_power(k * i * i);
    }
    return m;
}

Complex gauss_prefactor(const QuantizationContext& ctx) {
    Complex g{};
    for (std::int64_t k = 0; k < ctx.n; ++k) g += ctx.phase_power(k * k);
    return g / static_cast<double>(ctx.n);
}

MatrixC fourier_kernel(const QuantizationContext& ctx) {
    const int n = ctx.n;
    Complex g = gauss_prefactor(ctx);
    double dev = std::abs(std::abs(g) - 1.0 / std::sqrt(static_cast<double>(n)));
    if (dev > 1e-9) {
        std::ostringstream os;
        os << "weil generators: Gauss prefactor magnitude off 1/sqrt(N) by " << dev
           << " at N=" << n << " (deformation parameter convention is wrong)";
        throw Error(os.str());
    }
    MatrixC m(n, n);
    for (int i0 = 0; i0 < n; ++i0) {       // column index, e_{i0+1}
        for (int j0 = 0; j0 < n; ++j0) {   // row index
            m(j0, i0) = g * ctx.phase_power(2 * static_cast<std::int64_t>(i0 + 1) * (j0 + 1));
        }
    }
    return m;
}

// Letter operators used by rho. The positive-phase kernel conjugates
// Op(X), Op(Y) by the inverse letter S, so the letter S gets its adjoint.
MatrixC letter_operator(const QuantizationContext& ctx, Sl2Letter l) {
    switch (l) {
        case Sl2Letter::T: return t_power_matrix(ctx, 1);
        case Sl2Letter::TInv: return t_power_matrix(ctx, -1);
        case Sl2Letter::S: return fourier_kernel(ctx).adjoint();
        case Sl2Letter::SInv: return fourier_kernel(ctx);
    }
    return MatrixC::Identity(ctx.n, ctx.n);
}

} // namespace

WeilOperator::WeilOperator(QuantizationContext c, MatrixC m, SL2Matrix src)
    : ctx(std::move(c)), matrix(std::move(m)), source(src) {
    double dev = unitarity_defect(matrix);
    if (dev > 1e-9) {
        std::ostringstream os;
        os << "WeilOperator: matrix is not unitary, ||U^dag U - I||_F = " << dev;
        throw Error(os.str());
    }
}

std::pair<WeilOperator, WeilOperator> weil_generators(const QuantizationContext& ctx) {
    if (ctx.n < 2) throw Error("weil_generators: requires N >= 2");
    WeilOperator s(ctx, fourier_kernel(ctx), SL2Matrix::gen_s());
    WeilOperator t(ctx, t_power_matrix(ctx, 1), SL2Matrix::gen_t());
    return {std::move(s), std::move(t)};
}

WeilOperator rho(const QuantizationContext& ctx, const SL2Matrix& phi) {
    SL2Word word = decompose_sl2(phi);
    const int n = ctx.n;
    MatrixC u = MatrixC::Identity(n, n);
    std::size_t i = 0;
    while (i < word.letters.size()) {
        Sl2Letter l = word.letters[i];
        if (l == Sl2Letter::T || l == Sl2Letter::TInv) {
            // collapse a run of T letters into one diagonal factor
            std::int64_t k = 0;
            while (i < word.letters.size() &&
                   (word.letters[i] == Sl2Letter::T || word.letters[i] == Sl2Letter::TInv)) {
                k += (word.letters[i] == Sl2Letter::T) ? 1 : -1;
                ++i;
            }
            if (k != 0) {
                MatrixC d = t_power_matrix(ctx, k);
                for (int col = 0; col < n; ++col) u.col(col) *= d(col, col);
            }
        } else {
            u = u * letter_operator(ctx, l);
            ++i;
        }
    }
    return WeilOperator(ctx, std::move(u), phi);
}

double egorov_defect(const QuantizationContext& ctx, const SL2Matrix& phi,
                     const FourierObservable& f) {
    WeilOperator u = rho(ctx, phi);
    MatrixC conj = u.matrix.adjoint() * quantize(ctx, f).matrix * u.matrix;
    MatrixC target = quantize(ctx, pullback_sl2(f, phi)).matrix;
    return (conj - target).norm();
}

double unitarity_defect(const MatrixC& u) {
    return (u.adjoint() * u - MatrixC::Identity(u.rows(), u.cols())).norm();
}

double projective_distance(const MatrixC& a, const MatrixC& b) {
    Complex t = (b.adjoint() * a).trace();
    Complex lambda = std::abs(t) > 1e-12 ? t / std::abs(t) : Complex{1.0};
    return (a - lambda * b).norm();
}

double scalar_defect(const MatrixC& u) {
    return projective_distance(u, MatrixC::Identity(u.rows(), u.cols()));
}

} // namespace ergolab
