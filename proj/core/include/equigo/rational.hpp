#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace equigo {

using Integer = mpz_class;

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// kept inline; anything larger lives in a GMP `mpq_class`.  Results that
/// fit are demoted back to the inline form, so each value has exactly one
/// representation.
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t value) noexcept; // NOLINT(google-explicit-constructor)
    Rational(int value) noexcept : Rational(static_cast<std::int64_t>(value)) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);
    explicit Rational(const Integer& value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "a" or "a/b" (optional sign, decimal digits).
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    int sign() const noexcept;

    Integer numerator() const;
    Integer denominator() const;
    mpq_class to_mpq() const;
    /// Only meaningful when the value fits; callers check `fits_int64()` first.
    std::int64_t to_int64() const;
    bool fits_int64() const noexcept { return !big_ && den_ == 1; }
    double to_double() const;

    std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// this += a * b, without materializing the product when both are small.
    void add_mul(const Rational& a, const Rational& b);
    /// this -= a * b
    void sub_mul(const Rational& a, const Rational& b);

    Rational operator-() const;

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void assign_big(mpq_class&& value);
    void demote();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace equigo
