#include "equigo/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "equigo/error.hpp"

namespace equigo {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 x) { return x > static_cast<i128>(kMin) && x <= static_cast<i128>(kMax); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t uabs(std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
}

mpz_class mpz_from_i128(i128 x) {
    bool neg = x < 0;
    u128 mag = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    auto hi = static_cast<std::uint64_t>(mag >> 64);
    auto lo = static_cast<std::uint64_t>(mag);
    mpz_class out = hi;
    out <<= 64;
    out += mpz_class(static_cast<unsigned long>(lo));
    if (neg) out = -out;
    return out;
}

} // namespace

Rational::Rational(std::int64_t value) noexcept : num_(value), den_(1) {
    if (value == kMin) {
        // Cannot be negated inline; keep it in GMP form.
        big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(value)));
        num_ = 0;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    assign_big(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
}

Rational::Rational(const mpq_class& value) { assign_big(mpq_class(value)); }

Rational::Rational(const Integer& value) { assign_big(mpq_class(value)); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        if (other.big_) {
            if (big_) *big_ = *other.big_;
            else big_ = std::make_unique<mpq_class>(*other.big_);
        } else {
            big_.reset();
        }
    }
    return *this;
}

void Rational::assign_big(mpq_class&& value) {
    value.canonicalize();
    if (big_) *big_ = std::move(value);
    else big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
    demote();
}

void Rational::demote() {
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nn = n.get_si();
        if (nn != kMin) {
            num_ = nn;
            den_ = d.get_si();
            big_.reset();
        }
    }
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    auto digits = [&](std::size_t from) {
        std::size_t i = from;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        return i;
    };
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t end = digits(pos);
    if (end == pos) throw bad();
    if (end < text.size()) {
        if (text[end] != '/') throw bad();
        std::size_t dend = digits(end + 1);
        if (dend == end + 1 || dend != text.size()) throw bad();
    }
    std::string s(text.front() == '+' ? text.substr(1) : text);
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw bad();
    Rational r;
    r.assign_big(std::move(q));
    return r;
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Integer Rational::numerator() const {
    return big_ ? big_->get_num() : Integer(static_cast<long>(num_));
}

Integer Rational::denominator() const {
    return big_ ? big_->get_den() : Integer(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::int64_t Rational::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("Rational::to_int64: not a small integer");
    return num_;
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != kMin) {
                num_ = r;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        u128 g = gcd128(n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n), static_cast<u128>(d));
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
        return *this;
    }
    mpq_class sum = to_mpq() + rhs.to_mpq();
    assign_big(std::move(sum));
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t r;
            if (!__builtin_mul_overflow(num_, rhs.num_, &r) && r != kMin) {
                num_ = r;
                return *this;
            }
        }
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        auto g1 = static_cast<std::int64_t>(gcd64(uabs(num_), static_cast<std::uint64_t>(rhs.den_)));
        auto g2 = static_cast<std::int64_t>(gcd64(uabs(rhs.num_), static_cast<std::uint64_t>(den_)));
        i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
        i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(mpq_class(mpz_from_i128(n), mpz_from_i128(d)));
        return *this;
    }
    mpq_class prod = to_mpq() * rhs.to_mpq();
    assign_big(std::move(prod));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!rhs.big_) {
        // 1/rhs is inline-representable: |num| < 2^63 and den > 0.
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    mpq_class quot = to_mpq() / rhs.to_mpq();
    assign_big(std::move(quot));
    return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) && s != kMin) {
            num_ = s;
            return;
        }
    }
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_sub_overflow(num_, p, &s) && s != kMin) {
            num_ = s;
            return;
        }
    }
    if (a.is_zero() || b.is_zero()) return;
    *this -= a * b;
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational r;
    r.assign_big(mpq_class(-*big_));
    return r;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // unique representation: big values never fit inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

} // namespace equigo
