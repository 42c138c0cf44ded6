#include "cesaro/testfns.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

using namespace cesaro;
using cesaro::testing::random_point;

namespace
{

// Composite Simpson rule for complex integrands on [0, 1].
template <class Fn> cplx simpson01(Fn fn, int intervals = 4000)
{
    const double h = 1.0 / intervals;
    cplx acc = fn(0.0) + fn(1.0);
    for (int i = 1; i < intervals; ++i) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * fn(i * h);
    }
    return acc * h / 3.0;
}

cplx log2_over(cplx w)
{
    return std::log(2.0 / (1.0 - w));
}

// h_a written out from its defining formula.
cplx h_formula(cplx w, double a_norm_sq)
{
    const double c = 1.0 / std::log(2.0 / (1.0 - a_norm_sq));
    const cplx L = log2_over(w);
    return c * (w - 1.0) * ((1.0 + L) * (1.0 + L) + 1.0);
}

// (t d/dt)^k F(tz) at t = 1 by central differences.
cplx radial_fd(const CompositeRadial &F, const BallPoint &z, int order)
{
    const double h = 1e-4;
    auto at = [&](double t) {
        Vector v = z.coords();
        for (auto &c : v) {
            c *= t;
        }
        return F(BallPoint(std::move(v)));
    };
    const cplx f0 = at(1.0);
    const cplx fp = at(1.0 + h);
    const cplx fm = at(1.0 - h);
    const cplx d1 = (fp - fm) / (2.0 * h);
    if (order == 1) {
        return d1;
    }
    const cplx d2 = (fp - 2.0 * f0 + fm) / (h * h);
    return d1 + d2;
}

BallPoint along_e1(double r, std::size_t n = 1)
{
    Vector v(n, 0.0);
    v[0] = r;
    return BallPoint(std::move(v));
}

struct SilenceWarnings {
    SilenceWarnings()
    {
        set_warning_handler([](std::string_view) {});
    }
    ~SilenceWarnings()
    {
        set_warning_handler(nullptr);
    }
};

} // namespace

TEST_CASE("log kernel examples")
{
    const auto F = log_kernel({1.0});
    CHECK(std::abs(F(BallPoint({0.0})) - std::log(2.0)) < 1e-15);
    CHECK(std::abs(F(BallPoint({0.9})) - std::log(2.0 / 0.1)) < 1e-14);

    const auto G = log_kernel({0.6, 0.8});
    const BallPoint z({0.9 * 0.6, 0.9 * 0.8});
    CHECK(std::abs(G(z) - std::log(2.0 / 0.1)) < 1e-13);

    CHECK_THROWS_AS(log_kernel({1.0, 0.5}), Error);
    CHECK(log_weight(0.81) == doctest::Approx(std::log(2.0 / 0.19)).epsilon(1e-14));
}

TEST_CASE("profile expansion matches closed form")
{
    const auto F = log_kernel({1.0});
    const auto s = F.expansion(100);
    for (double r : {0.0, 0.3, 0.5, 0.7}) {
        for (double theta : {0.0, 1.0, 2.5, -2.0}) {
            const cplx w = std::polar(r, theta);
            CHECK(std::abs(s(BallPoint({w})) - log2_over(w)) < 1e-10);
        }
    }
}

TEST_CASE("threshold radius")
{
    const double r = anchor_threshold();
    CHECK(r == doctest::Approx(std::sqrt(1.0 - 2.0 / std::numbers::e)).epsilon(1e-15));
    CHECK(std::abs(log_weight(r * r) - 1.0) < 1e-14);

    std::string seen;
    set_warning_handler([&](std::string_view msg) { seen = msg; });
    (void)h_a(along_e1(0.2));
    set_warning_handler(nullptr);
    CHECK(!seen.empty());
}

TEST_CASE("h_a values and radial derivatives")
{
    for (double r : {0.6, 0.9, 0.99, 0.999}) {
        const auto a = along_e1(r, 2);
        const auto h = h_a(a);
        const double L0 = log_weight(r * r);
        const double c = 1.0 / L0;
        const double log2 = std::log(2.0);
        CHECK(std::abs(h(BallPoint::origin(2)) - cplx(-c * ((1 + log2) * (1 + log2) + 1))) < 1e-14);
        CHECK(std::abs(h.radial(a, 1) - r * r * L0) < 1e-12 * L0);
    }

    std::mt19937_64 rng(21);
    const auto a = along_e1(0.8, 2);
    const auto h = h_a(a);
    for (int i = 0; i < 10; ++i) {
        const BallPoint z = random_point(rng, 2, 0.9);
        const cplx w = z.pairing(a.coords());
        CHECK(std::abs(h(z) - h_formula(w, 0.64)) < 1e-13);
        CHECK(std::abs(h.radial(z, 1) - radial_fd(h, z, 1)) < 1e-6);
        CHECK(std::abs(h.radial(z, 2) - radial_fd(h, z, 2)) < 1e-6);
    }
}

TEST_CASE("f_a certificates")
{
    for (double r : {0.9, 0.99, 0.999}) {
        const auto a = along_e1(r, 3);
        const auto f = f_a(a);
        const double scale = log_weight(r * r);
        CHECK(std::abs(f.radial(a, 1)) < 1e-12 * scale);
        const double expected = std::pow(r, 4) / (1.0 - r * r);
        CHECK(std::abs(f.radial(a, 2) - expected) < 1e-10 * expected);
    }
}

TEST_CASE("f_a matches its integral definition")
{
    std::mt19937_64 rng(22);
    const auto a = along_e1(0.95, 2);
    const auto f = f_a(a);
    for (int i = 0; i < 20; ++i) {
        const BallPoint z = random_point(rng, 2, 0.9);
        const cplx w = z.pairing(a.coords());
        const cplx integral = simpson01([&](double t) { return w * log2_over(t * w); });
        CHECK(std::abs(f(z) - (h_formula(w, 0.95 * 0.95) - integral)) < 1e-10);
    }
}

TEST_CASE("log power integral closed form")
{
    std::mt19937_64 rng(23);
    for (int p = 1; p <= 3; ++p) {
        for (int i = 0; i < 10; ++i) {
            const cplx w = random_point(rng, 1, 0.8)[0];
            const cplx oracle = simpson01([&](double t) { return w * std::pow(log2_over(t * w), p); });
            CHECK(std::abs(log_power_integral(w, p) - oracle) < 1e-12);
            CHECK(std::abs(log_power_integral(w, p) - log_power_integral_quadrature(w, p, 64)) < 1e-12);
        }
    }
    CHECK(log_power_integral(0.0, 2) == cplx(0.0));
}

TEST_CASE("f_k certificates")
{
    for (double r : {0.9, 0.99, 0.999}) {
        const auto zk = along_e1(r, 2);
        const auto f = f_k(zk);
        const double L0 = log_weight(r * r);
        CHECK(std::abs(f.radial(zk, 1)) < 1e-12 * L0);
        const double expected = -std::pow(r, 4) / (1.0 - r * r);
        CHECK(std::abs(f.radial(zk, 2) - expected) < 1e-10 * std::abs(expected));

        const auto printed = f_k(zk, FkPrefactor::PrintedModulus);
        CHECK(std::abs(printed.radial(zk, 1)) > 1e-3);
    }
}

TEST_CASE("f_k shrinks on compact sets as |z_k| grows")
{
    auto sup_half_disc = [](const CompositeRadial &F) {
        double best = 0.0;
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j < 64; ++j) {
                const double r = 0.5 * i / 20.0;
                best = std::max(best, std::abs(F(BallPoint({std::polar(r, 2 * std::numbers::pi * j / 64)}))));
            }
        }
        return best;
    };
    const double near = sup_half_disc(f_k(along_e1(0.99)));
    const double far = sup_half_disc(f_k(along_e1(0.9999)));
    CHECK(far < near);
}

TEST_CASE("composite radial derivative")
{
    const auto F = log_kernel({0.6, 0.8});
    const auto RF = composite_radial_derivative(F, 1);
    std::mt19937_64 rng(24);
    for (int i = 0; i < 10; ++i) {
        const BallPoint z = random_point(rng, 2, 0.95);
        const cplx w = z.pairing(F.anchor());
        CHECK(std::abs(RF(z) - w / (1.0 - w)) < 1e-12);
        CHECK(std::abs(composite_radial_derivative(F, 2)(z) - F.radial(z, 2)) < 1e-10);
    }

    const auto c = constant_composite(2, 3.5);
    CHECK(std::abs(composite_radial_derivative(c, 1)(BallPoint({0.3, 0.2}))) == 0.0);
    CHECK_THROWS_AS(composite_radial_derivative(F, 3), Error);
}

TEST_CASE("series composite agrees with the series radial derivative")
{
    const auto s = random_polynomial(1, 8, 5);
    const Vector anchor{0.5, cplx(0.0, 0.5)};
    const auto F = series_composite(anchor, s);
    const auto Rs = radial_derivative(s);
    const auto RRs = radial_derivative(Rs);
    std::mt19937_64 rng(25);
    for (int i = 0; i < 10; ++i) {
        const BallPoint z = random_point(rng, 2, 0.95);
        const BallPoint w({z.pairing(anchor)});
        CHECK(std::abs(F(z) - s(w)) < 1e-12);
        CHECK(std::abs(F.radial(z, 1) - Rs(w)) < 1e-9);
        CHECK(std::abs(F.radial(z, 2) - RRs(w)) < 1e-9);
    }
}

TEST_CASE("anchor contract")
{
    SilenceWarnings quiet;
    CHECK_NOTHROW(h_a(along_e1(0.1)));
    CHECK(std::isfinite(std::abs(f_k(BallPoint::origin(2))(BallPoint({0.3, 0.1})))));
}
