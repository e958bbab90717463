#pragma once

#include <span>
#include <vector>

#include "equigo/cyclotomic.hpp"
#include "equigo/rational.hpp"

namespace equigo {

/// Class function on a cyclic group <g> of order N, recorded by the trace
/// of every power: values[k] = Tr(g^k), k = 0..N-1.
struct TraceVector {
    int order = 1;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_power(long long k) const;
    friend bool operator==(const TraceVector&, const TraceVector&) = default;
};

/// Elementary symmetric functions e_1..e_d of the eigenvalues, recovered from
/// the power traces p_k = Tr(g^k), k = 1..d, by Newton's identities.
std::vector<Cyclotomic> newton_exterior_powers(std::span<const Cyclotomic> power_traces);

/// Coefficients of prod_lambda (1 - lambda x), i.e. sum_i (-1)^i e_i x^i.
std::vector<Cyclotomic> alternating_exterior_polynomial(std::span<const Cyclotomic> eigenvalues);

enum class Genuineness { AllowVirtual, RequireGenuine };

/// Multiplicity of each irreducible character z^a of Z/N in a class function:
/// m_a = (1/N) sum_k values[k] zeta_N^{-ak}.
///
/// Throws NonIntegralMultiplicity if some m_a is not a rational integer and,
/// under RequireGenuine, NegativeMultiplicity if some m_a < 0.
std::vector<Integer> character_to_multiplicities(const TraceVector& traces,
                                                 Genuineness mode = Genuineness::AllowVirtual);

/// Inverse of character_to_multiplicities.
TraceVector traces_from_multiplicities(int order, std::span<const Integer> multiplicities);

/// Power trace of a multiset of eigenvalue exponents: sum_a zeta_N^{a k}.
Cyclotomic power_trace(int order, std::span<const int> exponents, long long k);

} // namespace equigo
