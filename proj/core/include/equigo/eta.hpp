#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equigo/rational.hpp"
#include "equigo/series.hpp"

namespace equigo {

struct EtaFactor {
    int scale = 1;
    std::int64_t exponent = 0;
    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// t^s * prod_d eta(t^d)^{e_d}, with eta(t) = t^{1/24} prod_n (1 - t^n).
/// Factors have distinct scales, sorted ascending, and nonzero exponents.
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(std::vector<EtaFactor> factors, std::int64_t extra_t_power);

    const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
    std::int64_t extra_t_power() const noexcept { return s_; }
    /// Exponent of d in the quotient, 0 if absent.
    std::int64_t exponent_at(int scale) const;
    /// 24 * (s + sum d e_d / 24), the net t-power scaled to an integer.
    std::int64_t net_exponent_24() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
    friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);

private:
    std::vector<EtaFactor> factors_;
    std::int64_t s_ = 0;
};

/// q-expansion through t^T.  Throws FractionalPrefactor when the net power is
/// not an integer and NegativePrefactor when it is negative.
TruncatedSeries expand(const EtaQuotient& eq, int T);

/// Eta quotient equal to exp(sum_{m,k} c(gcd(k, N)) t^{mk} / k), where c maps
/// every divisor of N to the trace of g^k with gcd(k, N) = d.
/// Throws NonIntegralExponent when d does not divide b_d = sum_{d'|d} mu(d/d') c(d'),
/// and FractionalPrefactor when c(N) / 24 is not an integer.
EtaQuotient eta_from_order_traces(int N, const std::map<int, Rational>& c);

/// Display form, e.g. "t/eta^4(t) eta^2(t^2) eta^4(t^4)"; the empty quotient is "1".
std::string render(const EtaQuotient& eq);

} // namespace equigo
