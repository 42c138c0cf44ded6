#include "cesaro/norms.hpp"
#include "cesaro/testfns.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cesaro;

namespace
{

Evaluable mono(int dim, int k, cplx c = 1.0)
{
    return Evaluable::from(TruncatedSeries::monomial(dim, std::max(k, 1), 0, k, c));
}

// Plain golden-section search for a unimodal function on [lo, hi].
double golden_max(const std::function<double(double)> &fn, double lo, double hi)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    for (int i = 0; i < 200; ++i) {
        const double c = b - inv_phi * (b - a);
        const double d = a + inv_phi * (b - a);
        if (fn(c) > fn(d)) {
            b = d;
        } else {
            a = c;
        }
    }
    return fn((a + b) / 2.0);
}

double objective_at(Space space, const Evaluable &F, const BallPoint &z)
{
    const double w = z.one_minus_norm_sq();
    switch (space) {
    case Space::Hinf:
        return std::abs(F(z));
    case Space::Bloch:
        return w * std::abs(F.radial(z, 1));
    case Space::LogBloch:
        return w * std::abs(F.radial(z, 1)) * std::log(2.0 / w);
    case Space::Zygmund:
        return std::abs(F(BallPoint::origin(z.dim()))) + w * std::abs(F.radial(z, 2));
    }
    return 0.0;
}

} // namespace

TEST_CASE("space names round-trip")
{
    for (Space s : {Space::Hinf, Space::Bloch, Space::LogBloch, Space::Zygmund}) {
        CHECK(parse_space(to_string(s)) == s);
    }
    CHECK(!parse_space("sobolev").has_value());
}

TEST_CASE("constants")
{
    const SamplerConfig cfg;
    const auto c = Evaluable::from(TruncatedSeries::constant(2, 2, cplx(3.0, 4.0)));
    CHECK(sup_norm(c, cfg).value == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(bloch_seminorm(c, cfg).value == 0.0);
    CHECK(log_bloch_seminorm(c, cfg).value == 0.0);
    CHECK(zygmund_norm(c, cfg).value == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(pointwise_log_bound(c, cfg) == 0.0);
}

TEST_CASE("sup norm of monomials")
{
    const SamplerConfig cfg;
    const double rmax = cfg.radius(cfg.ladder_depth);
    CHECK(rmax == 1.0 - std::ldexp(1.0, -14));
    const double est = sup_norm(mono(1, 1), cfg).value;
    CHECK(est >= rmax);
    CHECK(est < 1.0);
    for (int k : {2, 5, 17}) {
        CHECK(sup_norm(mono(1, k, 1.0 / k), cfg).value == doctest::Approx(1.0 / k).epsilon(1e-3));
    }
}

TEST_CASE("Bloch seminorm of z")
{
    const SamplerConfig cfg;
    const auto est = bloch_seminorm(mono(1, 1), cfg);
    CHECK(std::abs(est.value - 2.0 / (3.0 * std::sqrt(3.0))) < 1e-4);
    CHECK(est.argmax.norm() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-3));

    // random directions alone undershoot in n > 1; a hinted direction recovers the sup
    const double exact = 2.0 / (3.0 * std::sqrt(3.0));
    CHECK(bloch_seminorm(mono(3, 1), cfg).value <= exact);
    SamplerConfig hinted = cfg;
    hinted.extra_directions.push_back({1.0, 0.0, 0.0});
    CHECK(std::abs(bloch_seminorm(mono(3, 1), hinted).value - exact) < 1e-4);
}

TEST_CASE("log-Bloch seminorm of z against a 1-D oracle")
{
    const double oracle = golden_max(
        [](double r) {
            const double w = 1.0 - r * r;
            return w * r * std::log(2.0 / w);
        },
        0.0, 1.0);
    CHECK(std::abs(log_bloch_seminorm(mono(1, 1), SamplerConfig{}).value - oracle) < 1e-4);
}

TEST_CASE("log-Bloch seminorm of the log kernel grows with the anchor")
{
    const SamplerConfig cfg;
    double prev = 0.0;
    for (double r : {0.9, 0.99, 0.999}) {
        const double v = log_bloch_seminorm(Evaluable::from(log_kernel({r})), cfg).value;
        CHECK(std::isfinite(v));
        CHECK(v > prev);
        prev = v;
    }
    CHECK(std::isfinite(bloch_seminorm(Evaluable::from(log_kernel({0.99})), cfg).value));
}

TEST_CASE("Zygmund norm oracles")
{
    const SamplerConfig cfg;
    CHECK(std::abs(zygmund_norm(mono(1, 2), cfg).value - 1.0) < 1e-4);
    for (int k = 1; k <= 64; ++k) {
        CHECK(zygmund_norm(mono(1, k, 1.0 / k), cfg).value < 1.2);
    }
}

TEST_CASE("pointwise log bound")
{
    const double v = pointwise_log_bound(mono(1, 1), SamplerConfig{});
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
}

TEST_CASE("sample points")
{
    SamplerConfig cfg;
    const auto pts = sample_points(cfg, 1);
    REQUIRE(pts.size() == 512u * 14u);
    for (int j = 0; j < 512; ++j) {
        const cplx expected = std::polar(cfg.radius(1), 2.0 * std::numbers::pi * j / 512.0);
        CHECK(std::abs(pts[j][0] - expected) < 1e-15);
    }

    const auto a = sample_points(cfg, 3);
    const auto b = sample_points(cfg, 3);
    REQUIRE(a.size() == b.size());
    REQUIRE(a.size() == 256u * 14u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].coords() == b[i].coords());
        CHECK(a[i].norm() < 1.0);
        CHECK(a[i].norm() > 0.0);
    }

    cfg.extra_directions.push_back({1.0, 0.0, 0.0});
    CHECK(sample_points(cfg, 3).size() == 257u * 14u);

    cfg.rng_seed += 1;
    CHECK(sample_points(cfg, 3)[0].coords() != a[0].coords());
}

TEST_CASE("estimates are monotone in the sample set without refinement")
{
    const auto F = Evaluable::from(log_kernel({0.6, 0.8}));
    SamplerConfig small;
    small.refine_iters = 0;
    small.ladder_depth = 6;
    SamplerConfig large = small;
    large.ladder_depth = 12;
    for (Space s : {Space::Hinf, Space::Bloch, Space::LogBloch, Space::Zygmund}) {
        CHECK(estimate(s, F, small).value <= estimate(s, F, large).value);
    }
}

TEST_CASE("value equals the objective at the argmax")
{
    const SamplerConfig cfg;
    const auto F = Evaluable::from(h_a(BallPoint({0.7, 0.3})));
    for (Space s : {Space::Hinf, Space::Bloch, Space::LogBloch, Space::Zygmund}) {
        const auto est = estimate(s, F, cfg);
        CHECK(std::abs(est.value - objective_at(s, F, est.argmax)) <= 1e-12 * std::max(1.0, est.value));
        CHECK(est.samples_used > 0);
    }
}

TEST_CASE("estimates are deterministic")
{
    const SamplerConfig cfg;
    const auto F = Evaluable::from(f_a(BallPoint({0.5, cplx(0.0, 0.6)})));
    const auto a = zygmund_norm(F, cfg);
    const auto b = zygmund_norm(F, cfg);
    CHECK(a.value == b.value);
    CHECK(a.argmax.coords() == b.argmax.coords());
}
