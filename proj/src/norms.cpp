#include "cesaro/norms.hpp"

#include "cesaro/parallel.hpp"
#include "cesaro/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace cesaro
{

namespace
{

struct Sample {
    BallPoint point;
    int rung;
    Vector direction;
};

Vector normalized(const Vector &v, std::size_t n)
{
    if (v.size() != n) {
        throw Error("extra direction has the wrong dimension");
    }
    const double r = euclidean_norm(v);
    if (!(r > 0.0)) {
        throw Error("extra direction must be nonzero");
    }
    Vector u(v);
    for (auto &c : u) {
        c /= r;
    }
    return u;
}

BallPoint along(const Vector &direction, double r)
{
    Vector c(direction);
    for (auto &x : c) {
        x *= r;
    }
    return BallPoint(std::move(c));
}

std::vector<Sample> build_samples(const SamplerConfig &cfg, std::size_t n)
{
    if (n < 1) {
        throw Error("sampler dimension must be >= 1");
    }
    if (cfg.ladder_depth < 1 || cfg.ladder_depth > 40) {
        throw Error("ladder depth must be in [1, 40]");
    }
    const int per_radius = cfg.effective_directions(n);
    if (per_radius < 1) {
        throw Error("directions per radius must be >= 1");
    }
    std::vector<Vector> extras;
    for (const auto &d : cfg.extra_directions) {
        extras.push_back(normalized(d, n));
    }

    std::mt19937_64 rng(cfg.rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Sample> out;
    out.reserve(static_cast<std::size_t>(cfg.ladder_depth) * (per_radius + extras.size()));
    for (int j = 1; j <= cfg.ladder_depth; ++j) {
        const double r = cfg.radius(j);
        for (int k = 0; k < per_radius; ++k) {
            Vector zeta(n);
            if (n == 1) {
                zeta[0] = std::polar(1.0, 2.0 * std::numbers::pi * k / per_radius);
            } else {
                for (auto &c : zeta) {
                    const double re = gauss(rng);
                    const double im = gauss(rng);
                    c = cplx(re, im);
                }
                const double len = euclidean_norm(zeta);
                for (auto &c : zeta) {
                    c /= len;
                }
            }
            out.push_back(Sample{along(zeta, r), j, zeta});
        }
        for (const auto &zeta : extras) {
            out.push_back(Sample{along(zeta, r), j, zeta});
        }
    }
    return out;
}

double checked(double v)
{
    if (!std::isfinite(v)) {
        throw Error("non-finite objective value");
    }
    return v;
}

SamplerConfig with_hints(SamplerConfig cfg, const Evaluable &F)
{
    for (const auto &h : F.hint_directions()) {
        if (std::find(cfg.extra_directions.begin(), cfg.extra_directions.end(), h) == cfg.extra_directions.end()) {
            cfg.extra_directions.push_back(h);
        }
    }
    return cfg;
}

} // namespace

int SamplerConfig::effective_directions(std::size_t n) const
{
    if (directions_per_radius > 0) {
        return directions_per_radius;
    }
    return n == 1 ? 512 : 256;
}

double SamplerConfig::radius(int j) const
{
    return 1.0 - std::ldexp(1.0, -j);
}

std::string_view to_string(Space space)
{
    switch (space) {
    case Space::Hinf:
        return "hinf";
    case Space::Bloch:
        return "bloch";
    case Space::LogBloch:
        return "logbloch";
    case Space::Zygmund:
        return "zygmund";
    }
    return "unknown";
}

std::optional<Space> parse_space(std::string_view name)
{
    for (Space s : {Space::Hinf, Space::Bloch, Space::LogBloch, Space::Zygmund}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

std::vector<BallPoint> sample_points(const SamplerConfig &cfg, std::size_t n)
{
    std::vector<BallPoint> out;
    for (auto &s : build_samples(cfg, n)) {
        out.push_back(std::move(s.point));
    }
    return out;
}

NormEstimate maximize(const Objective &objective, std::size_t n, const SamplerConfig &cfg)
{
    const std::vector<Sample> samples = build_samples(cfg, n);
    std::vector<double> values(samples.size());
    parallel_for(samples.size(), [&](std::size_t i) { values[i] = checked(objective(samples[i].point)); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    NormEstimate est{values[best], samples[best].point, static_cast<long>(samples.size()), false};

    if (cfg.refine_iters > 0 && est.value > 0.0) {
        const int j = samples[best].rung;
        const double lo = j > 1 ? cfg.radius(j - 1) : 0.0;
        const double hi = cfg.radius(std::min(j + 1, cfg.ladder_depth));
        const Vector &dir = samples[best].direction;
        const GoldenResult g = golden_section_max(
            [&](double r) { return checked(objective(along(dir, r))); }, lo, hi, cfg.refine_iters);
        est.samples_used += g.evaluations;
        if (g.value > est.value) {
            est.value = g.value;
            est.argmax = along(dir, g.x);
            est.refined = true;
        }
    }
    return est;
}

NormEstimate sup_norm(const Evaluable &F, const SamplerConfig &cfg)
{
    return maximize([&](const BallPoint &z) { return std::abs(F(z)); }, F.dim(), with_hints(cfg, F));
}

NormEstimate bloch_seminorm(const Evaluable &F, const SamplerConfig &cfg)
{
    return maximize([&](const BallPoint &z) { return z.one_minus_norm_sq() * std::abs(F.radial(z, 1)); }, F.dim(),
                    with_hints(cfg, F));
}

NormEstimate log_bloch_seminorm(const Evaluable &F, const SamplerConfig &cfg)
{
    return maximize(
        [&](const BallPoint &z) {
            const double d = z.one_minus_norm_sq();
            return d * std::abs(F.radial(z, 1)) * std::log(2.0 / d);
        },
        F.dim(), with_hints(cfg, F));
}

NormEstimate zygmund_norm(const Evaluable &F, const SamplerConfig &cfg)
{
    const double at_origin = std::abs(F(BallPoint::origin(F.dim())));
    return maximize([&](const BallPoint &z) { return at_origin + z.one_minus_norm_sq() * std::abs(F.radial(z, 2)); },
                    F.dim(), with_hints(cfg, F));
}

NormEstimate estimate(Space space, const Evaluable &F, const SamplerConfig &cfg)
{
    switch (space) {
    case Space::Hinf:
        return sup_norm(F, cfg);
    case Space::Bloch:
        return bloch_seminorm(F, cfg);
    case Space::LogBloch:
        return log_bloch_seminorm(F, cfg);
    case Space::Zygmund:
        return zygmund_norm(F, cfg);
    }
    throw Error("unknown space");
}

double pointwise_log_bound(const Evaluable &F, const SamplerConfig &cfg)
{
    const double bloch = bloch_seminorm(F, cfg).value;
    if (bloch == 0.0) {
        return 0.0;
    }
    const cplx at_origin = F(BallPoint::origin(F.dim()));
    const std::vector<BallPoint> points = sample_points(with_hints(cfg, F), F.dim());
    std::vector<double> ratios(points.size(), 0.0);
    parallel_for(points.size(), [&](std::size_t i) {
        const BallPoint &z = points[i];
        if (z.norm() == 0.0) {
            return;
        }
        const double d = z.one_minus_norm_sq();
        ratios[i] = checked(std::abs(F(z) - at_origin) / (std::log(2.0 / d) * bloch));
    });
    return *std::max_element(ratios.begin(), ratios.end());
}

} // namespace cesaro
