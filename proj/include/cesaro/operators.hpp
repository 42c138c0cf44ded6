#ifndef CESARO_OPERATORS_HPP
#define CESARO_OPERATORS_HPP

#include "cesaro/evaluable.hpp"
#include "cesaro/series.hpp"

#include <vector>

namespace cesaro
{

enum class OperatorKind { Tg, Ig, Mg, CesaroClassical };

// Coefficient-space operators. Results are truncated at the smaller of the
// two caps, exactly like multiply().

// T_g f = R^{-1}(f Rg)
TruncatedSeries apply_T(const TruncatedSeries &g, const TruncatedSeries &f);
// I_g f = R^{-1}((Rf) g)
TruncatedSeries apply_I(const TruncatedSeries &g, const TruncatedSeries &f);
// M_g f = g f
TruncatedSeries apply_M(const TruncatedSeries &g, const TruncatedSeries &f);

// Largest coefficient of T_g f + I_g f - (M_g f - f(0) g(0)).
double identity_residual(const TruncatedSeries &g, const TruncatedSeries &f);

// b_j = (a_0 + ... + a_j) / (j + 1) for j < length (default: input length).
Vector classical_cesaro(const Vector &coeffs, std::size_t length = 0);

// Defining integrals, evaluated with an open Gauss-Legendre rule on (0,1):
//   T_g f(z) = int_0^1 f(tz) Rg(tz) dt/t
//   I_g f(z) = int_0^1 Rf(tz) g(tz) dt/t
cplx quadrature_T(const Evaluable &g, const Evaluable &f, const BallPoint &z, int nodes = 64);
cplx quadrature_I(const Evaluable &g, const Evaluable &f, const BallPoint &z, int nodes = 64);

// Pointwise images for operands that are not both series. Radial
// derivatives come from R(T_g f) = f Rg, R(I_g f) = (Rf) g and the product
// rule; values (order 0) of T_g f and I_g f fall back to quadrature.
Evaluable pointwise_T(const Evaluable &g, const Evaluable &f, int nodes = 64);
Evaluable pointwise_I(const Evaluable &g, const Evaluable &f, int nodes = 64);
Evaluable pointwise_M(const Evaluable &g, const Evaluable &f);

// L(z,w) = int_0^1 ((1 - t<z,w>)^-(n+1+beta) - 1) dt/t
cplx kernel_L(const BallPoint &z, const BallPoint &w, double beta, int nodes = 64);

} // namespace cesaro

#endif
