#pragma once

#include <Eigen/Dense>

#include "ergolab/fourier.hpp"

namespace ergolab {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

/// Level N with its deformation parameter and effective Planck constant:
///   N odd:  A = exp(2 i pi / N), hbar = 2/N
///   N even: A = exp(i pi / N),   hbar = 1/N
/// so that A = exp(i pi hbar) in both cases and A has order `phase_order()`.
struct QuantizationContext {
    static QuantizationContext make(int n);

    int n = 1;
    Complex a;
    double hbar = 2.0;

    /// A^k, computed from the reduced residue of k so large exponents stay exact.
    Complex phase_power(std::int64_t k) const;
    std::int64_t phase_order() const { return (n % 2 == 1) ? n : 2LL * n; }

    bool operator==(const QuantizationContext&) const = default;

private:
    QuantizationContext() = default;
};

/// An N x N matrix tied to the context it was built for.
struct QuantumOperator {
    QuantizationContext ctx;
    MatrixC matrix;
};

/// Weyl-ordered quantization. On monomials
///   Op(X^a Y^b) e_i = A^{ab + 2ai} e_{i+b}   (1-based index, mod N)
/// which is A^{-ab} Xhat^a Yhat^b with Xhat = diag(A^{2i}) and Yhat the
/// cyclic shift e_i -> e_{i+1}. This is the phase choice that sends the
/// star product to exact operator products and real observables to
/// Hermitian matrices. It is not positivity-preserving; downstream code
/// treats state values as complex throughout.
QuantumOperator quantize(const QuantizationContext& ctx, const FourierObservable& f);

/// Op(f) v without materializing the matrix. O(terms * N).
VectorC apply_quantized(const QuantizationContext& ctx, const FourierObservable& f,
                        const VectorC& v);

/// (1/N) Tr Op(f). Equals classical_average(f) exactly whenever every
/// exponent of f lies strictly inside (-N, N)^2; degree-N modes deviate
/// (e.g. X^N quantizes to the identity).
Complex trace_average(const QuantizationContext& ctx, const FourierObservable& f);

/// (1/dim W) sum_v <v, Op(f) v> over the orthonormal basis given by the
/// columns of `basis`. Throws OrthonormalityError (with the offending Gram
/// entry) if the columns fail orthonormality at 1e-10.
Complex subspace_state_value(const QuantizationContext& ctx, const MatrixC& basis,
                             const FourierObservable& f);

/// ||B^dag B - I||_max; helper for the orthonormality gate.
double orthonormality_defect(const MatrixC& basis, int* row = nullptr, int* col = nullptr);

} // namespace ergolab
