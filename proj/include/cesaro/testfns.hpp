#ifndef CESARO_TESTFNS_HPP
#define CESARO_TESTFNS_HPP

#include "cesaro/series.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace cesaro
{

// Taylor coefficients of a one-variable function about a base point w0:
// jet[j] = phi^(j)(w0) / j!.
using Jet = std::vector<cplx>;

// A holomorphic function phi on the unit disc, known through its local
// Taylor jets.
class Profile
{
public:
    virtual ~Profile() = default;
    virtual Jet taylor(cplx w, int order) const = 0;
};

enum class ProfileKind { Constant, LogKernel, Ha, Fa, Fk, Series, RadialDerivative };

std::string_view to_string(ProfileKind kind);

// log(2 / (1 - x)) for real or complex x off the cut.
double log_weight(double x);
cplx log_weight(cplx w);

// sqrt(1 - 2/e): the radius where log(2 / (1 - |a|^2)) = 1.
double anchor_threshold();

// Receives constructor warnings (anchor below threshold). Defaults to stderr.
void set_warning_handler(std::function<void(std::string_view)> handler);

// z -> phi(<z,a>) with an anchor a in the closed unit ball. Since
// R<z,a> = <z,a>, every radial derivative is again a function of w alone:
//   R phi(w)  = w phi'(w)
//   RR phi(w) = w phi'(w) + w^2 phi''(w)
class CompositeRadial
{
public:
    CompositeRadial(Vector anchor, ProfileKind kind, std::shared_ptr<const Profile> profile);

    std::size_t dim() const noexcept { return anchor_.size(); }
    const Vector &anchor() const noexcept { return anchor_; }
    ProfileKind kind() const noexcept { return kind_; }
    const Profile &profile() const noexcept { return *profile_; }
    std::shared_ptr<const Profile> profile_handle() const noexcept { return profile_; }

    // w = <z,a>; throws if Re(1 - w) <= 0, which cannot happen for z in B.
    cplx argument(const BallPoint &z) const;

    cplx operator()(const BallPoint &z) const { return radial(z, 0); }
    // R^order F(z), order in [0, 4].
    cplx radial(const BallPoint &z, int order) const;

    // The same quantities as functions of w directly.
    cplx profile_value(cplx w) const { return profile_radial(w, 0); }
    cplx profile_radial(cplx w, int order) const;

    // Degree-cap expansion of phi about w = 0 as a one-variable series.
    TruncatedSeries expansion(int cap) const;

private:
    Vector anchor_;
    ProfileKind kind_;
    std::shared_ptr<const Profile> profile_;
};

CompositeRadial constant_composite(std::size_t dim, cplx c);

// log(2 / (1 - <z,a>)); the anchor may lie on the unit sphere.
CompositeRadial log_kernel(Vector a);

// h_a(z) = (log 2/(1-|a|^2))^-1 (<z,a> - 1) [(1 + log 2/(1-<z,a>))^2 + 1]
CompositeRadial h_a(const BallPoint &a);

// f_a(z) = h_a(z) - int_0^1 <z,a> log(2/(1 - t<z,a>)) dt
CompositeRadial f_a(const BallPoint &a);

// Which modulus enters the log prefactor of f_k.
enum class FkPrefactor {
    // (log 2/(1-|z_k|^2))^-2: makes R f_k(z_k) = 0 hold exactly.
    SquaredModulus,
    // (log 2/(1-|z_k|))^-2: the literal printed variant, kept for comparison.
    PrintedModulus,
};

// f_k(z) = h_{z_k}(z) - P int_0^1 <z,z_k> (log 2/(1 - t<z,z_k>))^3 dt
CompositeRadial f_k(const BallPoint &zk, FkPrefactor prefactor = FkPrefactor::SquaredModulus);

// phi given by a one-variable series in w.
CompositeRadial series_composite(Vector anchor, const TruncatedSeries &profile);

// Profile w -> R^order phi(w); order 1 or 2.
CompositeRadial composite_radial_derivative(const CompositeRadial &F, int order);

// int_0^1 w (log 2/(1 - t w))^power dt in closed form.
cplx log_power_integral(cplx w, int power);
// Same integral by Gauss-Legendre quadrature in t.
cplx log_power_integral_quadrature(cplx w, int power, int nodes = 64);

} // namespace cesaro

#endif
