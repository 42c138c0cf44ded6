#include "cesaro/quadrature.hpp"

#include "cesaro/series.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace cesaro
{

namespace
{

GaussRule build_rule(int n)
{
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess; nodes on
    // [-1,1] are then mapped affinely onto (0,1).
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = 0.5 * (1.0 - x);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace

std::shared_ptr<const GaussRule> gauss_legendre_unit(int nodes)
{
    if (nodes < 1) {
        throw Error("quadrature needs at least one node");
    }
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GaussRule>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[nodes];
    if (!slot) {
        slot = std::make_shared<const GaussRule>(build_rule(nodes));
    }
    return slot;
}

double integrate(const std::function<double(double)> &fn, double lo, double hi, int nodes)
{
    const auto rule = gauss_legendre_unit(nodes);
    const double width = hi - lo;
    double acc = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        acc += rule->weights[i] * fn(lo + width * rule->nodes[i]);
    }
    return acc * width;
}

GoldenResult golden_section_max(const std::function<double(double)> &fn, double lo, double hi, int iterations)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    int evals = 2;
    GoldenResult best{fc >= fd ? c : d, std::max(fc, fd), 0};
    for (int it = 0; it < iterations; ++it) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = fn(c);
            if (fc > best.value) {
                best.x = c;
                best.value = fc;
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = fn(d);
            if (fd > best.value) {
                best.x = d;
                best.value = fd;
            }
        }
        ++evals;
    }
    best.evaluations = evals;
    return best;
}

} // namespace cesaro
