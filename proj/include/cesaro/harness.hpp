#ifndef CESARO_HARNESS_HPP
#define CESARO_HARNESS_HPP

#include "cesaro/evaluable.hpp"
#include "cesaro/norms.hpp"
#include "cesaro/report.hpp"
#include "cesaro/series.hpp"

#include <cstdint>
#include <vector>

namespace cesaro
{

struct HarnessConfig {
    SamplerConfig sampler;
    int quadrature_nodes = 64;
    // Allowed undershoot of a sampled sup against a pointwise certificate.
    double slack = 0.05;
    // Copied verbatim into the report config (e.g. how g was specified).
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

// Monomials z_1^k (k = 0..8) and four random polynomials of degree <= 8,
// each scaled to unit Zygmund norm.
std::vector<TruncatedSeries> standard_family(std::size_t n, std::uint64_t seed, const SamplerConfig &cfg);

// T_g on Z: ||T_g 1|| = ||Rg||_B, family ratios, and decay of ||T_g f_k||
// for f_k = z_1^k / k.
ExperimentReport theorem1_experiment(const TruncatedSeries &g, const std::vector<TruncatedSeries> &family,
                                     const HarnessConfig &cfg);

enum class GrowthExpectation { Bounded, Divergent };

// I_g against h_a and f_a over a grid of anchors with |a| >= sqrt(1-2/e).
ExperimentReport theorem2_experiment(const Evaluable &g, const std::vector<BallPoint> &a_grid,
                                     GrowthExpectation expectation, const HarnessConfig &cfg);

// I_g against f_k at z_k = r e_1.
ExperimentReport theorem3_experiment(const Evaluable &g, const std::vector<double> &radii, const HarnessConfig &cfg);

// M_g on Z, cross-checked against T_g f + I_g f + f(0) g(0).
ExperimentReport corollary_experiment(const TruncatedSeries &g, const std::vector<TruncatedSeries> &family,
                                      const HarnessConfig &cfg);

// Scalar constants and decay probes used along the way.
ExperimentReport elementary_probes(const HarnessConfig &cfg);

// sqrt(t) log(2/t) on (0, 1]: its true maximum and the printed constant.
struct SqrtLogProbe {
    double t_star;
    double max_value;
    double grid_max;
    double closed_form;
    double printed_constant;
};
SqrtLogProbe sqrt_log_probe();

} // namespace cesaro

#endif
