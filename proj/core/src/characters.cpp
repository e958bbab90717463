#include "equigo/characters.hpp"

#include <string>

#include "equigo/error.hpp"

namespace equigo {

const Cyclotomic& TraceVector::at_power(long long k) const {
    long long r = k % order;
    if (r < 0) r += order;
    return values.at(static_cast<std::size_t>(r));
}

std::vector<Cyclotomic> newton_exterior_powers(std::span<const Cyclotomic> power_traces) {
    const std::size_t d = power_traces.size();
    if (d == 0) throw Error(Errc::InvalidArgument, "newton_exterior_powers needs at least one power trace");
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    std::vector<Cyclotomic> e(d + 1);
    e[0] = Cyclotomic(1);
    for (std::size_t k = 1; k <= d; ++k) {
        Cyclotomic acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 1) acc.add_mul(e[k - i], power_traces[i - 1]);
            else acc.sub_mul(e[k - i], power_traces[i - 1]);
        }
        acc /= Rational(static_cast<std::int64_t>(k));
        e[k] = std::move(acc);
    }
    e.erase(e.begin());
    return e;
}

std::vector<Cyclotomic> alternating_exterior_polynomial(std::span<const Cyclotomic> eigenvalues) {
    std::vector<Cyclotomic> poly{Cyclotomic(1)};
    for (const auto& lambda : eigenvalues) {
        poly.emplace_back();
        for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i].sub_mul(poly[i - 1], lambda);
    }
    return poly;
}

std::vector<Integer> character_to_multiplicities(const TraceVector& traces, Genuineness mode) {
    const int n = traces.order;
    if (n < 1 || static_cast<int>(traces.values.size()) != n) {
        throw Error(Errc::InvalidArgument, "trace vector length must equal its order");
    }
    std::vector<Integer> out;
    out.reserve(n);
    for (int a = 0; a < n; ++a) {
        Cyclotomic acc;
        for (int k = 0; k < n; ++k) {
            acc.add_mul(traces.values[k], Cyclotomic::zeta(n, -static_cast<std::int64_t>(a) * k));
        }
        acc /= Rational(n);
        if (!acc.is_rational() || !acc.rational().is_integer()) {
            throw Error(Errc::NonIntegralMultiplicity,
                        "multiplicity of character " + std::to_string(a) + " is " + acc.to_string());
        }
        Integer m = acc.rational().numerator();
        if (mode == Genuineness::RequireGenuine && m < 0) {
            throw Error(Errc::NegativeMultiplicity,
                        "character " + std::to_string(a) + " has multiplicity " + m.get_str());
        }
        out.push_back(std::move(m));
    }
    return out;
}

TraceVector traces_from_multiplicities(int order, std::span<const Integer> multiplicities) {
    if (order < 1 || static_cast<int>(multiplicities.size()) != order) {
        throw Error(Errc::InvalidArgument, "need one multiplicity per character");
    }
    TraceVector tv{order, std::vector<Cyclotomic>(order)};
    for (int k = 0; k < order; ++k) {
        for (int a = 0; a < order; ++a) {
            if (multiplicities[a] == 0) continue;
            tv.values[k].add_mul(Cyclotomic(Rational(multiplicities[a])),
                                 Cyclotomic::zeta(order, static_cast<std::int64_t>(a) * k));
        }
    }
    return tv;
}

Cyclotomic power_trace(int order, std::span<const int> exponents, long long k) {
    Cyclotomic acc;
    for (int a : exponents) acc += Cyclotomic::zeta(order, static_cast<std::int64_t>(a) * k);
    return acc;
}

} // namespace equigo
