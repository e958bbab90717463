#include "equigo/eta.hpp"

#include <algorithm>
#include <numeric>

#include "equigo/error.hpp"
#include "equigo/partitions.hpp"

namespace equigo {

EtaQuotient::EtaQuotient(std::vector<EtaFactor> factors, std::int64_t extra_t_power) : s_(extra_t_power) {
    std::map<int, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.scale < 1) throw Error(Errc::InvalidArgument, "eta scale must be positive");
        merged[f.scale] += f.exponent;
    }
    for (const auto& [d, e] : merged) {
        if (e != 0) factors_.push_back({d, e});
    }
}

std::int64_t EtaQuotient::exponent_at(int scale) const {
    for (const auto& f : factors_) {
        if (f.scale == scale) return f.exponent;
    }
    return 0;
}

std::int64_t EtaQuotient::net_exponent_24() const {
    std::int64_t total = 24 * s_;
    for (const auto& f : factors_) total += static_cast<std::int64_t>(f.scale) * f.exponent;
    return total;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
    std::vector<EtaFactor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return EtaQuotient(std::move(all), a.s_ + b.s_);
}

TruncatedSeries expand(const EtaQuotient& eq, int T) {
    const std::int64_t net24 = eq.net_exponent_24();
    if (net24 % 24 != 0) {
        throw Error(Errc::FractionalPrefactor, "net t-power " + std::to_string(net24) + "/24 is not an integer");
    }
    if (net24 < 0) throw Error(Errc::NegativePrefactor, "net t-power " + std::to_string(net24 / 24) + " is negative");
    const std::int64_t net = net24 / 24;
    TruncatedSeries s(T);
    if (net > T) return s;
    s = TruncatedSeries::monomial(T, {static_cast<int>(net), 0, 0}, Cyclotomic(1));
    const Cyclotomic one_minus_x[] = {Cyclotomic(1), Cyclotomic(-1)};
    for (const auto& f : eq.factors()) {
        for (int n = 1; static_cast<std::int64_t>(f.scale) * n <= T; ++n) {
            const Monomial step{f.scale * n, 0, 0};
            for (std::int64_t i = 0; i < std::abs(f.exponent); ++i) {
                s = f.exponent > 0 ? multiply_by_polynomial_in(std::move(s), one_minus_x, step)
                                   : divide_by_polynomial_in(std::move(s), one_minus_x, step);
            }
        }
    }
    return s;
}

EtaQuotient eta_from_order_traces(int N, const std::map<int, Rational>& c) {
    if (N < 1) throw Error(Errc::InvalidArgument, "order must be positive");
    const auto divs = divisors(N);
    for (int d : divs) {
        if (!c.contains(d)) throw Error(Errc::InvalidArgument, "missing trace for divisor " + std::to_string(d));
    }
    std::vector<EtaFactor> factors;
    for (int d : divs) {
        Rational b;
        for (int dp : divisors(d)) {
            const int mu = moebius(d / dp);
            if (mu != 0) b += c.at(dp) * Rational(mu);
        }
        const Rational e = -b / Rational(d);
        if (!e.is_integer()) {
            throw Error(Errc::NonIntegralExponent,
                        "b_" + std::to_string(d) + " = " + b.to_string() + " is not divisible by " + std::to_string(d));
        }
        factors.push_back({d, e.to_int64()});
    }
    // sum_{d|N} b_d = c(N) telescopes, so the prefactor cancelling the eta powers is c(N)/24.
    const Rational s = c.at(N) / Rational(24);
    if (!s.is_integer()) {
        throw Error(Errc::FractionalPrefactor, "prefactor c(N)/24 = " + s.to_string() + " is not an integer");
    }
    return EtaQuotient(std::move(factors), s.to_int64());
}

namespace {

std::string t_power(std::int64_t k) { return k == 1 ? "t" : "t^" + std::to_string(k); }

std::string eta_term(const EtaFactor& f) {
    const std::int64_t e = std::abs(f.exponent);
    std::string out = "eta";
    if (e != 1) out += "^" + std::to_string(e);
    out += "(" + t_power(f.scale) + ")";
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

} // namespace

std::string render(const EtaQuotient& eq) {
    std::vector<std::string> num;
    std::vector<std::string> den;
    if (eq.extra_t_power() > 0) num.push_back(t_power(eq.extra_t_power()));
    if (eq.extra_t_power() < 0) den.push_back(t_power(-eq.extra_t_power()));
    for (const auto& f : eq.factors()) (f.exponent > 0 ? num : den).push_back(eta_term(f));
    std::string out = num.empty() ? "1" : join(num);
    if (!den.empty()) out += "/" + join(den);
    return out;
}

} // namespace equigo
