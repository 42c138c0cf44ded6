#ifndef CESARO_SERIES_HPP
#define CESARO_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cesaro
{

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

// Raised for contract violations: dimension mismatch, degree overflow,
// points outside the ball, malformed specs.
class Error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Hermitian pairing <z,a> = sum_j z_j conj(a_j).
cplx pairing(std::span<const cplx> z, std::span<const cplx> a);
double euclidean_norm(std::span<const cplx> z);

class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zero(std::size_t n);
    // e_j scaled by k: the exponent of z_j^k.
    static MultiIndex unit(std::size_t n, std::size_t j, int k = 1);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t j) const { return entries_[j]; }
    const std::vector<int> &entries() const noexcept { return entries_; }

    // |alpha|
    int order() const noexcept;

    MultiIndex operator+(const MultiIndex &other) const;
    bool operator==(const MultiIndex &) const = default;

private:
    std::vector<int> entries_;
};

// Graded order: first by |alpha|, then lexicographically. Iterating a
// series therefore visits terms in ascending total degree.
struct GradedLess {
    bool operator()(const MultiIndex &a, const MultiIndex &b) const;
};

// A point z of C^n with |z| < 1.
class BallPoint
{
public:
    explicit BallPoint(Vector coords);
    BallPoint(std::initializer_list<cplx> coords);

    static BallPoint origin(std::size_t n);

    std::size_t dim() const noexcept { return coords_.size(); }
    const Vector &coords() const noexcept { return coords_; }
    cplx operator[](std::size_t j) const { return coords_[j]; }
    double norm() const noexcept { return norm_; }
    // 1 - |z|^2 by direct subtraction.
    double one_minus_norm_sq() const noexcept { return 1.0 - norm_ * norm_; }

    // t*z for real 0 <= t <= 1 (always stays in the ball).
    BallPoint scaled(double t) const;

    cplx pairing(std::span<const cplx> a) const { return cesaro::pairing(coords_, a); }

private:
    Vector coords_;
    double norm_ = 0.0;
};

// Degree-capped Taylor polynomial in n complex variables with sparse
// storage. Immutable once built; every operation returns a new value.
class TruncatedSeries
{
public:
    using Terms = std::map<MultiIndex, cplx, GradedLess>;
    using Term = std::pair<MultiIndex, cplx>;

    // The zero series.
    TruncatedSeries(int dim, int cap);

    static TruncatedSeries make(int dim, int cap, std::span<const Term> terms);
    static TruncatedSeries make(int dim, int cap, std::initializer_list<Term> terms);
    static TruncatedSeries constant(int dim, int cap, cplx c);
    // c * z_j^k (j is zero-based).
    static TruncatedSeries monomial(int dim, int cap, std::size_t j, int k, cplx c = 1.0);

    int dim() const noexcept { return dim_; }
    int cap() const noexcept { return cap_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    // Highest |alpha| present (0 for the zero series).
    int degree() const noexcept;

    cplx coeff(const MultiIndex &alpha) const;
    cplx constant_term() const;

    // Same coefficients under a different cap. Lowering the cap drops terms.
    TruncatedSeries with_cap(int cap) const;

    cplx operator()(const BallPoint &z) const;

private:
    TruncatedSeries(int dim, int cap, Terms terms);
    void normalize();

    int dim_;
    int cap_;
    Terms terms_;
};

TruncatedSeries make_series(int dim, int cap, std::span<const TruncatedSeries::Term> terms);

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries scale(const TruncatedSeries &a, cplx c);
TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b);

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries operator*(cplx c, const TruncatedSeries &a);

cplx evaluate(const TruncatedSeries &s, const BallPoint &z);

// R: a_alpha -> |alpha| a_alpha.
TruncatedSeries radial_derivative(const TruncatedSeries &s);

// Inverse of R on series without constant term: a_alpha -> a_alpha / |alpha|.
// Throws if |constant term| > 1e-14.
TruncatedSeries radial_antiderivative(const TruncatedSeries &s);

// Largest coefficient modulus of a - b over the union of supports.
double max_coeff_diff(const TruncatedSeries &a, const TruncatedSeries &b);

} // namespace cesaro

#endif
