#include "cesaro/operators.hpp"

#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro
{

namespace
{

void require_same_dim(std::size_t a, std::size_t b)
{
    if (a != b) {
        throw Error("operator symbol and operand have different dimensions");
    }
}

double binomial(int n, int k)
{
    double b = 1.0;
    for (int i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
    }
    return b;
}

std::vector<Vector> merged_hints(const Evaluable &g, const Evaluable &f)
{
    std::vector<Vector> hints = f.hint_directions();
    for (const auto &h : g.hint_directions()) {
        if (std::find(hints.begin(), hints.end(), h) == hints.end()) {
            hints.push_back(h);
        }
    }
    return hints;
}

// int_0^1 integrand(t) dt / t over (0,1).
template <typename F>
cplx integrate_over_t(const F &integrand, int nodes)
{
    if (nodes < 16) {
        throw Error("quadrature needs at least 16 nodes");
    }
    const auto rule = gauss_legendre_unit(nodes);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        const double t = rule->nodes[i];
        const cplx v = integrand(t) / t;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error("non-finite integrand sample in quadrature");
        }
        acc += rule->weights[i] * v;
    }
    return acc;
}

} // namespace

TruncatedSeries apply_T(const TruncatedSeries &g, const TruncatedSeries &f)
{
    require_same_dim(g.dim(), f.dim());
    return radial_antiderivative(multiply(f, radial_derivative(g)));
}

TruncatedSeries apply_I(const TruncatedSeries &g, const TruncatedSeries &f)
{
    require_same_dim(g.dim(), f.dim());
    return radial_antiderivative(multiply(radial_derivative(f), g));
}

TruncatedSeries apply_M(const TruncatedSeries &g, const TruncatedSeries &f)
{
    require_same_dim(g.dim(), f.dim());
    return multiply(g, f);
}

double identity_residual(const TruncatedSeries &g, const TruncatedSeries &f)
{
    const TruncatedSeries lhs = add(apply_T(g, f), apply_I(g, f));
    const cplx offset = f.constant_term() * g.constant_term();
    const TruncatedSeries rhs =
        subtract(apply_M(g, f), TruncatedSeries::constant(f.dim(), std::min(f.cap(), g.cap()), offset));
    return max_coeff_diff(lhs, rhs);
}

Vector classical_cesaro(const Vector &coeffs, std::size_t length)
{
    if (length == 0) {
        length = coeffs.size();
    }
    Vector out(length);
    cplx partial = 0.0;
    for (std::size_t j = 0; j < length; ++j) {
        if (j < coeffs.size()) {
            partial += coeffs[j];
        }
        out[j] = partial / static_cast<double>(j + 1);
    }
    return out;
}

cplx quadrature_T(const Evaluable &g, const Evaluable &f, const BallPoint &z, int nodes)
{
    require_same_dim(g.dim(), f.dim());
    return integrate_over_t(
        [&](double t) {
            const BallPoint tz = z.scaled(t);
            return f(tz) * g.radial(tz, 1);
        },
        nodes);
}

cplx quadrature_I(const Evaluable &g, const Evaluable &f, const BallPoint &z, int nodes)
{
    require_same_dim(g.dim(), f.dim());
    return integrate_over_t(
        [&](double t) {
            const BallPoint tz = z.scaled(t);
            return f.radial(tz, 1) * g(tz);
        },
        nodes);
}

Evaluable pointwise_T(const Evaluable &g, const Evaluable &f, int nodes)
{
    require_same_dim(g.dim(), f.dim());
    const int max_order = 1 + std::min(f.max_order(), g.max_order() - 1);
    return Evaluable(
        f.dim(),
        [g, f, nodes](const BallPoint &z, int order) -> cplx {
            if (order == 0) {
                return quadrature_T(g, f, z, nodes);
            }
            // R^k(T_g f) = R^(k-1)(f Rg)
            cplx acc = 0.0;
            for (int i = 0; i <= order - 1; ++i) {
                acc += binomial(order - 1, i) * f.radial(z, i) * g.radial(z, order - i);
            }
            return acc;
        },
        max_order, merged_hints(g, f));
}

Evaluable pointwise_I(const Evaluable &g, const Evaluable &f, int nodes)
{
    require_same_dim(g.dim(), f.dim());
    const int max_order = 1 + std::min(f.max_order() - 1, g.max_order());
    return Evaluable(
        f.dim(),
        [g, f, nodes](const BallPoint &z, int order) -> cplx {
            if (order == 0) {
                return quadrature_I(g, f, z, nodes);
            }
            // R^k(I_g f) = R^(k-1)((Rf) g)
            cplx acc = 0.0;
            for (int i = 0; i <= order - 1; ++i) {
                acc += binomial(order - 1, i) * f.radial(z, i + 1) * g.radial(z, order - 1 - i);
            }
            return acc;
        },
        max_order, merged_hints(g, f));
}

Evaluable pointwise_M(const Evaluable &g, const Evaluable &f)
{
    require_same_dim(g.dim(), f.dim());
    const int max_order = std::min(f.max_order(), g.max_order());
    return Evaluable(
        f.dim(),
        [g, f](const BallPoint &z, int order) -> cplx {
            cplx acc = 0.0;
            for (int i = 0; i <= order; ++i) {
                acc += binomial(order, i) * f.radial(z, i) * g.radial(z, order - i);
            }
            return acc;
        },
        max_order, merged_hints(g, f));
}

cplx kernel_L(const BallPoint &z, const BallPoint &w, double beta, int nodes)
{
    if (z.dim() != w.dim()) {
        throw Error("kernel_L: dimension mismatch");
    }
    if (!(beta > 0.0)) {
        throw Error("kernel_L: beta must be positive");
    }
    const cplx lambda = z.pairing(w.coords());
    if (std::abs(lambda) == 0.0) {
        return 0.0;
    }
    const double power = static_cast<double>(z.dim()) + 1.0 + beta;
    const auto rule = gauss_legendre_unit(nodes);

    // The integrand steepens near t = 1 as <z,w> -> 1; grade the panels
    // geometrically toward that end.
    const double gap = std::abs(1.0 - lambda);
    const int panels = std::clamp(static_cast<int>(std::ceil(std::log2(1.0 / gap))) + 2, 1, 48);
    cplx acc = 0.0;
    double lo = 0.0;
    for (int p = 1; p <= panels; ++p) {
        const double hi = p == panels ? 1.0 : 1.0 - std::ldexp(1.0, -p);
        const double width = hi - lo;
        for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
            const double t = lo + width * rule->nodes[i];
            const cplx v = (std::pow(1.0 - t * lambda, -power) - 1.0) / t;
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw Error("kernel_L: non-finite integrand sample");
            }
            acc += width * rule->weights[i] * v;
        }
        lo = hi;
    }
    return acc;
}

} // namespace cesaro
