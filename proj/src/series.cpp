#include "cesaro/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cesaro
{

namespace
{

constexpr double drop_threshold = 1e-300;

void require_same_dim(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.dim() != b.dim()) {
        throw Error("series dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

} // namespace

cplx pairing(std::span<const cplx> z, std::span<const cplx> a)
{
    if (z.size() != a.size()) {
        throw Error("pairing: dimension mismatch");
    }
    cplx acc = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        acc += z[j] * std::conj(a[j]);
    }
    return acc;
}

double euclidean_norm(std::span<const cplx> z)
{
    double acc = 0.0;
    for (const auto &c : z) {
        acc += std::norm(c);
    }
    return std::sqrt(acc);
}

// MultiIndex

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty()) {
        throw Error("multi-index must have at least one entry");
    }
    for (int e : entries_) {
        if (e < 0) {
            throw Error("multi-index entries must be nonnegative");
        }
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(std::size_t n)
{
    return MultiIndex(std::vector<int>(n, 0));
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j, int k)
{
    std::vector<int> e(n, 0);
    e.at(j) = k;
    return MultiIndex(std::move(e));
}

int MultiIndex::order() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::operator+(const MultiIndex &other) const
{
    if (size() != other.size()) {
        throw Error("multi-index length mismatch");
    }
    std::vector<int> e(entries_);
    for (std::size_t j = 0; j < e.size(); ++j) {
        e[j] += other.entries_[j];
    }
    return MultiIndex(std::move(e));
}

bool GradedLess::operator()(const MultiIndex &a, const MultiIndex &b) const
{
    const int oa = a.order();
    const int ob = b.order();
    if (oa != ob) {
        return oa < ob;
    }
    return a.entries() < b.entries();
}

// BallPoint

BallPoint::BallPoint(Vector coords) : coords_(std::move(coords))
{
    if (coords_.empty()) {
        throw Error("ball point needs dimension >= 1");
    }
    norm_ = euclidean_norm(coords_);
    if (!(norm_ < 1.0)) {
        throw Error("point is not inside the unit ball (|z| = " + std::to_string(norm_) + ")");
    }
}

BallPoint::BallPoint(std::initializer_list<cplx> coords) : BallPoint(Vector(coords)) {}

BallPoint BallPoint::origin(std::size_t n)
{
    return BallPoint(Vector(n, 0.0));
}

BallPoint BallPoint::scaled(double t) const
{
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error("scale factor must lie in [0,1]");
    }
    Vector c(coords_);
    for (auto &x : c) {
        x *= t;
    }
    return BallPoint(std::move(c));
}

// TruncatedSeries

TruncatedSeries::TruncatedSeries(int dim, int cap) : dim_(dim), cap_(cap)
{
    if (dim < 1) {
        throw Error("series dimension must be >= 1");
    }
    if (cap < 0) {
        throw Error("degree cap must be >= 0");
    }
}

TruncatedSeries::TruncatedSeries(int dim, int cap, Terms terms) : TruncatedSeries(dim, cap)
{
    terms_ = std::move(terms);
    normalize();
}

void TruncatedSeries::normalize()
{
    std::erase_if(terms_, [this](const auto &kv) {
        return kv.first.order() > cap_ || std::abs(kv.second) < drop_threshold;
    });
}

TruncatedSeries TruncatedSeries::make(int dim, int cap, std::span<const Term> terms)
{
    TruncatedSeries out(dim, cap);
    for (const auto &[alpha, c] : terms) {
        if (alpha.size() != static_cast<std::size_t>(dim)) {
            throw Error("multi-index length " + std::to_string(alpha.size()) + " does not match dimension "
                        + std::to_string(dim));
        }
        if (alpha.order() > cap) {
            throw Error("multi-index order " + std::to_string(alpha.order()) + " exceeds cap " + std::to_string(cap));
        }
        out.terms_[alpha] += c;
    }
    out.normalize();
    return out;
}

TruncatedSeries TruncatedSeries::make(int dim, int cap, std::initializer_list<Term> terms)
{
    return make(dim, cap, std::span<const Term>(terms.begin(), terms.size()));
}

TruncatedSeries TruncatedSeries::constant(int dim, int cap, cplx c)
{
    return make(dim, cap, {Term{MultiIndex::zero(dim), c}});
}

TruncatedSeries TruncatedSeries::monomial(int dim, int cap, std::size_t j, int k, cplx c)
{
    return make(dim, cap, {Term{MultiIndex::unit(dim, j, k), c}});
}

int TruncatedSeries::degree() const noexcept
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.order();
}

cplx TruncatedSeries::coeff(const MultiIndex &alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

cplx TruncatedSeries::constant_term() const
{
    return coeff(MultiIndex::zero(dim_));
}

TruncatedSeries TruncatedSeries::with_cap(int cap) const
{
    return TruncatedSeries(dim_, cap, terms_);
}

cplx TruncatedSeries::operator()(const BallPoint &z) const
{
    if (z.dim() != static_cast<std::size_t>(dim_)) {
        throw Error("evaluate: point dimension does not match series");
    }
    const int top = degree();
    // powers[j][k] = z_j^k
    std::vector<Vector> powers(dim_, Vector(top + 1, 1.0));
    for (int j = 0; j < dim_; ++j) {
        for (int k = 1; k <= top; ++k) {
            powers[j][k] = powers[j][k - 1] * z[j];
        }
    }
    cplx acc = 0.0;
    for (const auto &[alpha, c] : terms_) {
        cplx mono = c;
        for (int j = 0; j < dim_; ++j) {
            mono *= powers[j][alpha[j]];
        }
        acc += mono;
    }
    return acc;
}

TruncatedSeries make_series(int dim, int cap, std::span<const TruncatedSeries::Term> terms)
{
    return TruncatedSeries::make(dim, cap, terms);
}

TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_dim(a, b);
    const int cap = std::min(a.cap(), b.cap());
    std::vector<TruncatedSeries::Term> terms;
    for (const auto &t : a.terms()) {
        if (t.first.order() <= cap) {
            terms.push_back(t);
        }
    }
    for (const auto &t : b.terms()) {
        if (t.first.order() <= cap) {
            terms.push_back(t);
        }
    }
    return TruncatedSeries::make(a.dim(), cap, terms);
}

TruncatedSeries scale(const TruncatedSeries &a, cplx c)
{
    std::vector<TruncatedSeries::Term> terms;
    terms.reserve(a.terms().size());
    for (const auto &[alpha, v] : a.terms()) {
        terms.emplace_back(alpha, v * c);
    }
    return TruncatedSeries::make(a.dim(), a.cap(), terms);
}

TruncatedSeries subtract(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return add(a, scale(b, -1.0));
}

TruncatedSeries multiply(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_dim(a, b);
    const int cap = std::min(a.cap(), b.cap());
    TruncatedSeries::Terms acc;
    for (const auto &[alpha, ca] : a.terms()) {
        const int oa = alpha.order();
        if (oa > cap) {
            break;
        }
        for (const auto &[beta, cb] : b.terms()) {
            if (oa + beta.order() > cap) {
                // terms are graded, nothing further fits
                break;
            }
            acc[alpha + beta] += ca * cb;
        }
    }
    std::vector<TruncatedSeries::Term> terms(acc.begin(), acc.end());
    return TruncatedSeries::make(a.dim(), cap, terms);
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return add(a, b);
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return subtract(a, b);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return multiply(a, b);
}

TruncatedSeries operator*(cplx c, const TruncatedSeries &a)
{
    return scale(a, c);
}

cplx evaluate(const TruncatedSeries &s, const BallPoint &z)
{
    return s(z);
}

TruncatedSeries radial_derivative(const TruncatedSeries &s)
{
    std::vector<TruncatedSeries::Term> terms;
    for (const auto &[alpha, c] : s.terms()) {
        const int k = alpha.order();
        if (k > 0) {
            terms.emplace_back(alpha, static_cast<double>(k) * c);
        }
    }
    return TruncatedSeries::make(s.dim(), s.cap(), terms);
}

TruncatedSeries radial_antiderivative(const TruncatedSeries &s)
{
    if (std::abs(s.constant_term()) > 1e-14) {
        throw Error("radial antiderivative undefined: series has a nonzero constant term");
    }
    std::vector<TruncatedSeries::Term> terms;
    for (const auto &[alpha, c] : s.terms()) {
        const int k = alpha.order();
        if (k > 0) {
            terms.emplace_back(alpha, c / static_cast<double>(k));
        }
    }
    return TruncatedSeries::make(s.dim(), s.cap(), terms);
}

double max_coeff_diff(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_dim(a, b);
    double worst = 0.0;
    for (const auto &[alpha, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coeff(alpha)));
    }
    for (const auto &[alpha, c] : b.terms()) {
        worst = std::max(worst, std::abs(a.coeff(alpha) - c));
    }
    return worst;
}

} // namespace cesaro
