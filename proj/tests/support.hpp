// Shared generators for the unit tests.
#ifndef CESARO_TESTS_SUPPORT_HPP
#define CESARO_TESTS_SUPPORT_HPP

#include "cesaro/series.hpp"
#include "cesaro/spec_io.hpp"

#include <random>

namespace cesaro::testing
{

// Uniform-ish random point with |z| <= rmax.
inline BallPoint random_point(std::mt19937_64 &rng, std::size_t n, double rmax)
{
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit;
    Vector v(n);
    for (auto &c : v) {
        c = cplx(gauss(rng), gauss(rng));
    }
    const double len = euclidean_norm(v);
    const double r = rmax * unit(rng);
    for (auto &c : v) {
        c *= r / len;
    }
    return BallPoint(std::move(v));
}

// Sparse random polynomial: each multi-index kept with probability 1/2.
inline TruncatedSeries random_series(std::mt19937_64 &rng, std::size_t n, int degree, int cap)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::bernoulli_distribution keep(0.5);
    std::vector<TruncatedSeries::Term> terms;
    for (auto &alpha : multi_indices(n, degree)) {
        if (keep(rng)) {
            const double re = unit(rng);
            const double im = unit(rng);
            terms.emplace_back(std::move(alpha), cplx(re, im));
        }
    }
    return TruncatedSeries::make(static_cast<int>(n), cap, terms);
}

} // namespace cesaro::testing

#endif
