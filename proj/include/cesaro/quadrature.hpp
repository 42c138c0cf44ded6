#ifndef CESARO_QUADRATURE_HPP
#define CESARO_QUADRATURE_HPP

#include <functional>
#include <memory>
#include <vector>

namespace cesaro
{

// Gauss-Legendre rule mapped to the open interval (0,1). No node sits on
// an endpoint, so integrands with a removable singularity at t = 0 are safe.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached per node count; safe to call from several threads.
std::shared_ptr<const GaussRule> gauss_legendre_unit(int nodes);

// Integral over (lo, hi) of a real-valued function with an n-node rule.
double integrate(const std::function<double(double)> &fn, double lo, double hi, int nodes = 64);

// Maximizer of a unimodal function on [lo, hi] by golden-section search.
struct GoldenResult {
    double x;
    double value;
    int evaluations;
};
GoldenResult golden_section_max(const std::function<double(double)> &fn, double lo, double hi, int iterations);

} // namespace cesaro

#endif
