#include "cesaro/evaluable.hpp"

#include <array>
#include <cmath>
#include <memory>

namespace cesaro
{

Evaluable::Evaluable(std::size_t dim, RadialFn fn, int max_order, std::vector<Vector> hint_directions)
    : dim_(dim), fn_(std::move(fn)), max_order_(max_order), hints_(std::move(hint_directions))
{
    if (dim_ < 1) {
        throw Error("evaluable needs dimension >= 1");
    }
}

cplx Evaluable::radial(const BallPoint &z, int order) const
{
    if (z.dim() != dim_) {
        throw Error("evaluable called with a point of the wrong dimension");
    }
    if (order < 0 || order > max_order_) {
        throw Error("radial order " + std::to_string(order) + " not available (max " + std::to_string(max_order_) + ")");
    }
    const cplx v = fn_(z, order);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error("non-finite function value");
    }
    return v;
}

Evaluable Evaluable::from(const TruncatedSeries &s)
{
    constexpr int depth = 3;
    auto ladder = std::make_shared<std::array<TruncatedSeries, depth + 1>>(
        std::array<TruncatedSeries, depth + 1>{s, s, s, s});
    for (int k = 1; k <= depth; ++k) {
        (*ladder)[k] = radial_derivative((*ladder)[k - 1]);
    }
    return Evaluable(
        s.dim(), [ladder](const BallPoint &z, int order) { return (*ladder)[order](z); }, depth);
}

Evaluable Evaluable::from(const CompositeRadial &F)
{
    return Evaluable(
        F.dim(), [F](const BallPoint &z, int order) { return F.radial(z, order); }, 4, anchor_direction(F.anchor()));
}

std::vector<Vector> anchor_direction(const Vector &a)
{
    const double r = euclidean_norm(a);
    if (r == 0.0) {
        return {};
    }
    Vector u(a);
    for (auto &c : u) {
        c /= r;
    }
    return {u};
}

} // namespace cesaro
