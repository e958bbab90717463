#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equigo/rational.hpp"

namespace equigo {

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
/// The result is monic of degree phi(N).
const std::vector<std::int64_t>& cyclotomic_polynomial(int order);

int euler_phi(int n);

/// Element of Q(zeta_N), stored as sum c_a z^a with 0 <= a < phi(N),
/// i.e. reduced modulo the N-th cyclotomic polynomial.
///
/// Rational values are normalized to order 1 and carry no heap storage.
/// Values of different
/// orders combine in the lcm order.  Equality compares values, not storage.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(Rational value) : c0_(std::move(value)) {} // NOLINT(google-explicit-constructor)
    Cyclotomic(std::int64_t value) : c0_(value) {}         // NOLINT(google-explicit-constructor)
    Cyclotomic(int value) : c0_(value) {}                  // NOLINT(google-explicit-constructor)

    /// zeta_N^exponent (any integer exponent).
    static Cyclotomic zeta(int order, std::int64_t exponent);

    /// sum coeffs[a] z^a in Q(zeta_N); coeffs may have any length.
    static Cyclotomic from_power_coefficients(int order, std::span<const Rational> coeffs);

    /// Parses the output of to_string().
    static Cyclotomic parse(std::string_view text);

    /// Storage order; 1 for every rational value.
    int order() const noexcept { return order_; }

    /// Canonical coefficient vector of length phi(order()).
    std::vector<Rational> coefficients() const;

    bool is_zero() const noexcept { return rest_.empty() && c0_.is_zero(); }
    bool is_rational() const noexcept { return rest_.empty(); }
    /// Rational value; only valid when is_rational().
    const Rational& rational() const noexcept { return c0_; }

    /// Same value, stored in order `order` (which must be a multiple of order()).
    Cyclotomic embedded(int order) const;

    /// Complex conjugate: zeta -> zeta^{-1}.
    Cyclotomic conj() const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Rational& rhs);
    Cyclotomic& operator/=(const Rational& rhs);

    /// this += a * b
    void add_mul(const Cyclotomic& a, const Cyclotomic& b);
    /// this -= a * b
    void sub_mul(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic operator-() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& b) { return a /= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// "a/b" for rationals, otherwise "zetaN(c0 + c1*z + c2*z^2 ...)".
    std::string to_string() const;

private:
    // Builds from a full-length (phi(order)) vector and normalizes.
    static Cyclotomic from_reduced(int order, std::vector<Rational> coeffs);
    void normalize();

    int order_ = 1;
    Rational c0_;
    std::vector<Rational> rest_; // z^1 .. z^{phi-1}; empty iff rational
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value);

} // namespace equigo
