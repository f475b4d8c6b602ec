#pragma once

#include <utility>

#include "ergolab/quantize.hpp"
#include "ergolab/sl2.hpp"

namespace ergolab {

/// Unitary image of an SL2(Z) element on C^N; unitarity is checked at
/// construction (||U^dag U - I||_F <= 1e-9).
struct WeilOperator {
    WeilOperator(QuantizationContext ctx, MatrixC matrix, SL2Matrix source);

    QuantizationContext ctx;
    MatrixC matrix;
    SL2Matrix source;
};

/// The two generator operators, built entrywise:
///   rho(T) e_i = A^{i^2} e_i
///   rho(S) e_i = (1/N sum_k A^{k^2}) sum_j A^{2ij} e_j
/// Returned as (S, T). Requires N >= 2. Throws if the Gauss prefactor
/// magnitude strays from 1/sqrt(N) by more than 1e-9 (that would signal a
/// wrong deformation-parameter convention).
std::pair<WeilOperator, WeilOperator> weil_generators(const QuantizationContext& ctx);

/// Projective unitary representation, built as the product of letter
/// operators along decompose_sl2(phi). Letter assignment:
///   T -> diag(A^{i^2}),  S -> adjoint of the Fourier kernel above.
/// The displayed kernel with positive phase conjugates the basic operators
/// by the *inverse* letter S, so rho uses its adjoint; with that choice
/// rho is projectively multiplicative, well defined up to a global phase
/// independently of the word, and conjugation realizes pullback_exponent
/// exactly:  rho(phi)^-1 Op(f) rho(phi) = Op(pullback_sl2(f, phi)).
WeilOperator rho(const QuantizationContext& ctx, const SL2Matrix& phi);

/// ||rho(phi)^-1 Op(f) rho(phi) - Op(pullback_sl2(f, phi))||_F.
/// Conjugation is blind to the projective phase, so no phase minimization
/// is involved.
double egorov_defect(const QuantizationContext& ctx, const SL2Matrix& phi,
                     const FourierObservable& f);

/// ||U^dag U - I||_F.
double unitarity_defect(const MatrixC& u);

/// min over unit-modulus lambda of ||A - lambda B||_F; the minimizer is
/// the phase of Tr(B^dag A).
double projective_distance(const MatrixC& a, const MatrixC& b);

/// Distance of U from the scalar multiples of the identity.
double scalar_defect(const MatrixC& u);

} // namespace ergolab
