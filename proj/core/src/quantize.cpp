#include "ergolab/quantize.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ergolab/errors.hpp"

namespace ergolab {

QuantizationContext QuantizationContext::make(int n) {
    if (n < 1) throw Error("QuantizationContext: level must be >= 1, got " + std::to_string(n));
    QuantizationContext ctx;
    ctx.n = n;
    if (n % 2 == 1) {
        ctx.hbar = 2.0 / n;
        ctx.a = std::polar(1.0, 2.0 * std::numbers::pi / n);
    } else {
        ctx.hbar = 1.0 / n;
        ctx.a = std::polar(1.0, std::numbers::pi / n);
    }
    if (std::abs(std::abs(ctx.a) - 1.0) > 1e-15)
        throw Error("QuantizationContext: deformation parameter lost unit modulus");
    return ctx;
}

Complex QuantizationContext::phase_power(std::int64_t k) const {
    std::int64_t order = phase_order();
    std::int64_t m = k % order;
    if (m < 0) m += order;
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) /
                               static_cast<double>(order));
}

namespace {

inline int wrap_index(std::int64_t i, int n) {
    std::int64_t r = i % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

} // namespace

QuantumOperator quantize(const QuantizationContext& ctx, const FourierObservable& f) {
    const int n = ctx.n;
    MatrixC m = MatrixC::Zero(n, n);
    for (const auto& [e, c] : f.terms()) {
        for (int col = 0; col < n; ++col) {
            std::int64_t i = col + 1;  // basis vectors are e_1 ... e_N
            int row = wrap_index(col + e.b, n);
            m(row, col) += c * ctx.phase_power(e.a * e.b + 2 * e.a * i);
        }
    }
    return {ctx, std::move(m)};
}

VectorC apply_quantized(const QuantizationContext& ctx, const FourierObservable& f,
                        const VectorC& v) {
    const int n = ctx.n;
    if (v.size() != n) throw Error("apply_quantized: vector size does not match level");
    VectorC out = VectorC::Zero(n);
    for (const auto& [e, c] : f.terms()) {
        for (int col = 0; col < n; ++col) {
            std::int64_t i = col + 1;
            int row = wrap_index(col + e.b, n);
            out(row) += c * ctx.phase_power(e.a * e.b + 2 * e.a * i) * v(col);
        }
    }
    return out;
}

Complex trace_average(const QuantizationContext& ctx, const FourierObservable& f) {
    const int n = ctx.n;
    Complex tr{};
    for (const auto& [e, c] : f.terms()) {
        if (wrap_index(e.b, n) != 0) continue;  // off-diagonal shift, traceless
        Complex s{};
        for (int col = 0; col < n; ++col) {
            std::int64_t i = col + 1;
            s += ctx.phase_power(e.a * e.b + 2 * e.a * i);
        }
        tr += c * s;
    }
    return tr / static_cast<double>(n);
}

double orthonormality_defect(const MatrixC& basis, int* row, int* col) {
    MatrixC gram = basis.adjoint() * basis;
    double worst = 0.0;
    int wr = 0, wc = 0;
    for (int i = 0; i < gram.rows(); ++i) {
        for (int j = 0; j < gram.cols(); ++j) {
            double dev = std::abs(gram(i, j) - (i == j ? Complex{1.0} : Complex{}));
            if (dev > worst) worst = dev, wr = i, wc = j;
        }
    }
    if (row) *row = wr;
    if (col) *col = wc;
    return worst;
}

Complex subspace_state_value(const QuantizationContext& ctx, const MatrixC& basis,
                             const FourierObservable& f) {
    if (basis.cols() == 0) throw Error("subspace_state_value: empty basis");
    if (basis.rows() != ctx.n)
        throw Error("subspace_state_value: basis rows do not match the level");
    int r = 0, c = 0;
    double defect = orthonormality_defect(basis, &r, &c);
    if (defect > 1e-10) {
        std::ostringstream os;
        os << "subspace_state_value: basis fails orthonormality, Gram(" << r << "," << c
           << ") deviates by " << defect;
        throw OrthonormalityError(r, c, defect, os.str());
    }
    Complex sum{};
    for (int j = 0; j < basis.cols(); ++j) {
        VectorC v = basis.col(j);
        sum += v.dot(apply_quantized(ctx, f, v));  // Eigen dot conjugates the left factor
    }
    return sum / static_cast<double>(basis.cols());
}

} // namespace ergolab
