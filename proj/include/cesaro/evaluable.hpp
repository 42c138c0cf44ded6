#ifndef CESARO_EVALUABLE_HPP
#define CESARO_EVALUABLE_HPP

#include "cesaro/series.hpp"
#include "cesaro/testfns.hpp"

#include <functional>
#include <string>

namespace cesaro
{

// A holomorphic function on B known pointwise together with its first
// radial derivatives. Order 0 is the value, order k is R^k F.
class Evaluable
{
public:
    using RadialFn = std::function<cplx(const BallPoint &, int)>;

    Evaluable(std::size_t dim, RadialFn fn, int max_order, std::vector<Vector> hint_directions = {});

    static Evaluable from(const TruncatedSeries &s);
    static Evaluable from(const CompositeRadial &F);

    std::size_t dim() const noexcept { return dim_; }
    int max_order() const noexcept { return max_order_; }
    // Unit vectors along which the function is known to peak.
    const std::vector<Vector> &hint_directions() const noexcept { return hints_; }

    cplx operator()(const BallPoint &z) const { return radial(z, 0); }
    cplx radial(const BallPoint &z, int order) const;

private:
    std::size_t dim_;
    RadialFn fn_;
    int max_order_;
    std::vector<Vector> hints_;
};

// Unit vectors pointing along a nonzero anchor, empty otherwise.
std::vector<Vector> anchor_direction(const Vector &a);

} // namespace cesaro

#endif
