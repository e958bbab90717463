#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>

#include "equigo/series.hpp"

namespace equigo::testing {

using Complex = std::complex<double>;

/// Numerical value of a cyclotomic number, the independent reference for exact arithmetic.
inline Complex evaluate(const Cyclotomic& c) {
    const auto coeffs = c.coefficients();
    const double angle = 2.0 * std::numbers::pi / c.order();
    Complex total;
    for (std::size_t a = 0; a < coeffs.size(); ++a) total += coeffs[a].to_double() * std::polar(1.0, angle * static_cast<double>(a));
    return total;
}

inline bool close(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

/// Sparse map representation with schoolbook arithmetic.
using NaiveSeries = std::map<Monomial, Cyclotomic>;

inline NaiveSeries naive(const TruncatedSeries& s) {
    NaiveSeries out;
    for (const auto& [m, c] : s.terms()) out[m] = c;
    return out;
}

inline NaiveSeries naive_mul(const NaiveSeries& a, const NaiveSeries& b, int trunc) {
    NaiveSeries out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            if (ma.t + mb.t > trunc) continue;
            out[{ma.t + mb.t, ma.u + mb.u, ma.v + mb.v}] += ca * cb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

inline Cyclotomic random_cyclotomic(std::mt19937& rng, int max_order = 6) {
    const int order = std::uniform_int_distribution<int>(1, max_order)(rng);
    std::vector<Rational> coeffs;
    for (int a = 0; a < order; ++a) {
        coeffs.emplace_back(std::uniform_int_distribution<int>(-3, 3)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    }
    return Cyclotomic::from_power_coefficients(order, coeffs);
}

inline TruncatedSeries random_series(std::mt19937& rng, int trunc, int terms, bool rational_only = false) {
    TruncatedSeries s(trunc);
    std::uniform_int_distribution<int> t_dist(0, trunc);
    std::uniform_int_distribution<int> uv_dist(0, 3);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int i = 0; i < terms; ++i) {
        const Cyclotomic c = rational_only ? Cyclotomic(small(rng)) : random_cyclotomic(rng);
        s.add_term({t_dist(rng), uv_dist(rng), uv_dist(rng)}, c);
    }
    return s;
}

} // namespace equigo::testing
