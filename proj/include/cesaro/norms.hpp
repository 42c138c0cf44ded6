#ifndef CESARO_NORMS_HPP
#define CESARO_NORMS_HPP

#include "cesaro/evaluable.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace cesaro
{

struct SamplerConfig {
    // 0 selects the default: 512 equispaced angles for n = 1, 256 random
    // directions for n > 1.
    int directions_per_radius = 0;
    // Radii r_j = 1 - 2^-j for j = 1..ladder_depth.
    int ladder_depth = 14;
    int refine_iters = 40;
    std::uint64_t rng_seed = 20240601;
    // Sampled at every ladder radius in addition to the random directions.
    std::vector<Vector> extra_directions;

    int effective_directions(std::size_t n) const;
    double radius(int j) const;
};

struct NormEstimate {
    double value = 0.0;
    BallPoint argmax = BallPoint::origin(1);
    long samples_used = 0;
    bool refined = false;
};

enum class Space { Hinf, Bloch, LogBloch, Zygmund };

std::string_view to_string(Space space);
std::optional<Space> parse_space(std::string_view name);

// Ladder radii times unit directions, in deterministic order: radius-major,
// random directions first, then extra directions. Never contains z = 0.
std::vector<BallPoint> sample_points(const SamplerConfig &cfg, std::size_t n);

using Objective = std::function<double(const BallPoint &)>;

// Sup of a nonnegative objective over the sample set, followed by a
// golden-section search along the ray through the best sample. Ties keep
// the first sample in sample order. Add hint_directions of the function to
// cfg.extra_directions before calling when they matter.
NormEstimate maximize(const Objective &objective, std::size_t n, const SamplerConfig &cfg);

// sup |F|
NormEstimate sup_norm(const Evaluable &F, const SamplerConfig &cfg);
// sup (1 - |z|^2) |RF(z)|
NormEstimate bloch_seminorm(const Evaluable &F, const SamplerConfig &cfg);
// sup (1 - |z|^2) |RF(z)| log(2 / (1 - |z|^2))
NormEstimate log_bloch_seminorm(const Evaluable &F, const SamplerConfig &cfg);
// |F(0)| + sup (1 - |z|^2) |RRF(z)|
NormEstimate zygmund_norm(const Evaluable &F, const SamplerConfig &cfg);

NormEstimate estimate(Space space, const Evaluable &F, const SamplerConfig &cfg);

// max over sampled z != 0 of |F(z) - F(0)| / (log(2/(1-|z|^2)) ||F||_B).
// Zero when the Bloch seminorm vanishes.
double pointwise_log_bound(const Evaluable &F, const SamplerConfig &cfg);

} // namespace cesaro

#endif
