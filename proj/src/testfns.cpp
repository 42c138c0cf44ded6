#include "cesaro/testfns.hpp"

#include "cesaro/quadrature.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>

namespace cesaro
{

namespace
{

std::mutex warning_mutex;
std::function<void(std::string_view)> warning_handler = [](std::string_view msg) {
    std::cerr << "warning: " << msg << '\n';
};

void warn(std::string_view msg)
{
    std::lock_guard lock(warning_mutex);
    if (warning_handler) {
        warning_handler(msg);
    }
}

// Jet arithmetic; all jets in one expression share the same length.

Jet jet_mul(const Jet &a, const Jet &b)
{
    Jet out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < out.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Jet jet_add(Jet a, const Jet &b, cplx scale_b = 1.0)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += scale_b * b[i];
    }
    return a;
}

Jet jet_scale(Jet a, cplx s)
{
    for (auto &c : a) {
        c *= s;
    }
    return a;
}

// Jet of the identity map: w0 + eps.
Jet jet_variable(cplx w0, int order)
{
    Jet out(order + 1, 0.0);
    out[0] = w0;
    if (order >= 1) {
        out[1] = 1.0;
    }
    return out;
}

Jet jet_constant(cplx c, int order)
{
    Jet out(order + 1, 0.0);
    out[0] = c;
    return out;
}

// d/dw, losing one order.
Jet jet_derivative(const Jet &a)
{
    if (a.size() <= 1) {
        return Jet{};
    }
    Jet out(a.size() - 1);
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        out[j] = static_cast<double>(j + 1) * a[j + 1];
    }
    return out;
}

void check_branch(cplx w)
{
    if (!(1.0 - w.real() > 0.0)) {
        throw Error("log kernel evaluated off its principal branch (Re(1-w) <= 0)");
    }
}

// L(w0 + eps) = L(w0) + sum_m (eps / (1 - w0))^m / m
Jet log_jet(cplx w0, int order)
{
    check_branch(w0);
    Jet out(order + 1);
    out[0] = log_weight(w0);
    const cplx q = 1.0 / (1.0 - w0);
    cplx qm = 1.0;
    for (int m = 1; m <= order; ++m) {
        qm *= q;
        out[m] = qm / static_cast<double>(m);
    }
    return out;
}

// Antiderivative jet: value at w0 given, higher terms from the integrand.
Jet primitive_jet(cplx value, const Jet &integrand, int order)
{
    Jet out(order + 1);
    out[0] = value;
    for (int j = 1; j <= order; ++j) {
        out[j] = integrand[j - 1] / static_cast<double>(j);
    }
    return out;
}

Jet log_power_jet(cplx w0, int power, int order)
{
    const Jet l = log_jet(w0, order);
    Jet out = jet_constant(1.0, order);
    for (int p = 0; p < power; ++p) {
        out = jet_mul(out, l);
    }
    return out;
}

class ConstantProfile final : public Profile
{
public:
    explicit ConstantProfile(cplx c) : c_(c) {}
    Jet taylor(cplx, int order) const override { return jet_constant(c_, order); }

private:
    cplx c_;
};

class LogKernelProfile final : public Profile
{
public:
    Jet taylor(cplx w, int order) const override { return log_jet(w, order); }
};

// scale * (w - 1) [(1 + L)^2 + 1]
Jet h_jet(cplx w, int order, double scale)
{
    const Jet l = log_jet(w, order);
    const Jet shifted = jet_add(jet_constant(1.0, order), l);
    const Jet bracket = jet_add(jet_mul(shifted, shifted), jet_constant(1.0, order));
    const Jet factor = jet_add(jet_variable(w, order), jet_constant(1.0, order), -1.0);
    return jet_scale(jet_mul(factor, bracket), scale);
}

class HaProfile final : public Profile
{
public:
    explicit HaProfile(double scale) : scale_(scale) {}
    Jet taylor(cplx w, int order) const override { return h_jet(w, order, scale_); }

private:
    double scale_;
};

// h-part minus weight * int_0^w L(s)^power ds
class HMinusLogIntegralProfile final : public Profile
{
public:
    HMinusLogIntegralProfile(double scale, double weight, int power) : scale_(scale), weight_(weight), power_(power)
    {
    }

    Jet taylor(cplx w, int order) const override
    {
        const Jet h = h_jet(w, order, scale_);
        const Jet integrand = log_power_jet(w, power_, order);
        const Jet integral = primitive_jet(log_power_integral(w, power_), integrand, order);
        return jet_add(h, integral, -weight_);
    }

private:
    double scale_;
    double weight_;
    int power_;
};

class SeriesProfile final : public Profile
{
public:
    explicit SeriesProfile(const TruncatedSeries &s)
    {
        if (s.dim() != 1) {
            throw Error("series profile must be one-variable");
        }
        coeffs_.assign(s.degree() + 1, 0.0);
        for (const auto &[alpha, c] : s.terms()) {
            coeffs_[alpha[0]] = c;
        }
    }

    // Taylor shift: c_j = sum_m b_m C(m, j) w^(m-j)
    Jet taylor(cplx w, int order) const override
    {
        Jet out(order + 1, 0.0);
        const int top = static_cast<int>(coeffs_.size()) - 1;
        for (int j = 0; j <= std::min(order, top); ++j) {
            // Horner over m = j..top of b_m C(m,j) w^(m-j)
            cplx acc = 0.0;
            for (int m = top; m >= j; --m) {
                acc = acc * w + coeffs_[m] * binomial(m, j);
            }
            out[j] = acc;
        }
        return out;
    }

private:
    static double binomial(int m, int j)
    {
        double b = 1.0;
        for (int i = 1; i <= j; ++i) {
            b = b * (m - j + i) / i;
        }
        return b;
    }

    Vector coeffs_;
};

// psi = R^k phi as a function of w: psi_{i+1} = w * psi_i'.
class RadialShiftProfile final : public Profile
{
public:
    RadialShiftProfile(std::shared_ptr<const Profile> base, int shift) : base_(std::move(base)), shift_(shift) {}

    Jet taylor(cplx w, int order) const override
    {
        Jet jet = base_->taylor(w, order + shift_);
        for (int s = 0; s < shift_; ++s) {
            const Jet d = jet_derivative(jet);
            jet = jet_mul(jet_variable(w, static_cast<int>(d.size()) - 1), d);
        }
        return jet;
    }

private:
    std::shared_ptr<const Profile> base_;
    int shift_;
};

// Stirling numbers of the second kind, S(k, j) for k <= 4.
constexpr std::array<std::array<int, 5>, 5> stirling2{{
    {1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 0},
    {0, 1, 3, 1, 0},
    {0, 1, 7, 6, 1},
}};

double require_inside(const BallPoint &a, std::string_view what)
{
    const double r = a.norm();
    if (r < anchor_threshold()) {
        warn(std::string(what) + ": |a| = " + std::to_string(r) + " is below sqrt(1-2/e); norm bounds not asserted here");
    }
    return r;
}

} // namespace

std::string_view to_string(ProfileKind kind)
{
    switch (kind) {
    case ProfileKind::Constant:
        return "constant";
    case ProfileKind::LogKernel:
        return "log_kernel";
    case ProfileKind::Ha:
        return "h_a";
    case ProfileKind::Fa:
        return "f_a";
    case ProfileKind::Fk:
        return "f_k";
    case ProfileKind::Series:
        return "series";
    case ProfileKind::RadialDerivative:
        return "radial_derivative";
    }
    return "unknown";
}

double log_weight(double x)
{
    return std::log(2.0 / (1.0 - x));
}

cplx log_weight(cplx w)
{
    // log 2 - log(1 - w), principal branch.
    return std::numbers::ln2 - std::log(1.0 - w);
}

double anchor_threshold()
{
    return std::sqrt(1.0 - 2.0 / std::numbers::e);
}

void set_warning_handler(std::function<void(std::string_view)> handler)
{
    std::lock_guard lock(warning_mutex);
    warning_handler = std::move(handler);
}

CompositeRadial::CompositeRadial(Vector anchor, ProfileKind kind, std::shared_ptr<const Profile> profile)
    : anchor_(std::move(anchor)), kind_(kind), profile_(std::move(profile))
{
    if (anchor_.empty()) {
        throw Error("composite anchor needs dimension >= 1");
    }
    if (euclidean_norm(anchor_) > 1.0 + 1e-15) {
        throw Error("composite anchor must lie in the closed unit ball");
    }
    if (!profile_) {
        throw Error("composite needs a profile");
    }
}

cplx CompositeRadial::argument(const BallPoint &z) const
{
    if (z.dim() != dim()) {
        throw Error("composite evaluated at a point of the wrong dimension");
    }
    const cplx w = z.pairing(anchor_);
    check_branch(w);
    return w;
}

cplx CompositeRadial::radial(const BallPoint &z, int order) const
{
    return profile_radial(argument(z), order);
}

cplx CompositeRadial::profile_radial(cplx w, int order) const
{
    if (order < 0 || order > 4) {
        throw Error("radial derivative order must be in [0, 4]");
    }
    const Jet jet = profile_->taylor(w, order);
    if (order == 0) {
        return jet[0];
    }
    // R^k phi = sum_j S(k,j) w^j phi^(j), with phi^(j) = j! jet[j]
    cplx acc = 0.0;
    cplx wj = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= order; ++j) {
        wj *= w;
        fact *= j;
        acc += static_cast<double>(stirling2[order][j]) * wj * fact * jet[j];
    }
    return acc;
}

TruncatedSeries CompositeRadial::expansion(int cap) const
{
    const Jet jet = profile_->taylor(0.0, cap);
    std::vector<TruncatedSeries::Term> terms;
    for (int m = 0; m <= cap; ++m) {
        terms.emplace_back(MultiIndex{m}, jet[m]);
    }
    return TruncatedSeries::make(1, cap, terms);
}

CompositeRadial constant_composite(std::size_t dim, cplx c)
{
    return CompositeRadial(Vector(dim, 0.0), ProfileKind::Constant, std::make_shared<ConstantProfile>(c));
}

CompositeRadial log_kernel(Vector a)
{
    return CompositeRadial(std::move(a), ProfileKind::LogKernel, std::make_shared<LogKernelProfile>());
}

CompositeRadial h_a(const BallPoint &a)
{
    const double r = require_inside(a, "h_a");
    const double scale = 1.0 / log_weight(r * r);
    return CompositeRadial(a.coords(), ProfileKind::Ha, std::make_shared<HaProfile>(scale));
}

CompositeRadial f_a(const BallPoint &a)
{
    const double r = require_inside(a, "f_a");
    const double scale = 1.0 / log_weight(r * r);
    return CompositeRadial(a.coords(), ProfileKind::Fa, std::make_shared<HMinusLogIntegralProfile>(scale, 1.0, 1));
}

CompositeRadial f_k(const BallPoint &zk, FkPrefactor prefactor)
{
    const double r = require_inside(zk, "f_k");
    const double scale = 1.0 / log_weight(r * r);
    const double l = prefactor == FkPrefactor::SquaredModulus ? log_weight(r * r) : log_weight(r);
    return CompositeRadial(zk.coords(), ProfileKind::Fk,
                           std::make_shared<HMinusLogIntegralProfile>(scale, 1.0 / (l * l), 3));
}

CompositeRadial series_composite(Vector anchor, const TruncatedSeries &profile)
{
    return CompositeRadial(std::move(anchor), ProfileKind::Series, std::make_shared<SeriesProfile>(profile));
}

CompositeRadial composite_radial_derivative(const CompositeRadial &F, int order)
{
    if (order != 1 && order != 2) {
        throw Error("composite radial derivative order must be 1 or 2");
    }
    return CompositeRadial(F.anchor(), ProfileKind::RadialDerivative,
                           std::make_shared<RadialShiftProfile>(F.profile_handle(), order));
}

cplx log_power_integral(cplx w, int power)
{
    if (power < 0) {
        throw Error("log power must be nonnegative");
    }
    check_branch(w);
    // int L(s)^p ds = -(1-s) sum_{k=0}^p p!/(p-k)! L^(p-k); evaluate 0 -> w.
    auto primitive = [power](cplx l, cplx one_minus) {
        cplx acc = 0.0;
        double falling = 1.0;
        cplx lp = 1.0;
        Vector powers(power + 1);
        for (int k = 0; k <= power; ++k) {
            powers[k] = lp;
            lp *= l;
        }
        for (int k = 0; k <= power; ++k) {
            acc += falling * powers[power - k];
            falling *= power - k;
        }
        return -one_minus * acc;
    };
    return primitive(log_weight(w), 1.0 - w) - primitive(std::numbers::ln2, 1.0);
}

cplx log_power_integral_quadrature(cplx w, int power, int nodes)
{
    const auto rule = gauss_legendre_unit(nodes);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        acc += rule->weights[i] * std::pow(log_weight(rule->nodes[i] * w), power);
    }
    return w * acc;
}

} // namespace cesaro
