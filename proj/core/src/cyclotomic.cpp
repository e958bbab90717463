#include "equigo/cyclotomic.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "equigo/error.hpp"

namespace equigo {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic b; both lowest degree first.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

int checked_order(int order) {
    if (order < 1) throw Error(Errc::InvalidArgument, "cyclotomic order must be positive");
    return order;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// Reduces a polynomial in z (any length) modulo z^N - 1 and then modulo Phi_N.
std::vector<Rational> reduce(int order, std::vector<Rational> poly) {
    const int n = order;
    if (static_cast<int>(poly.size()) > n) {
        for (std::size_t i = n; i < poly.size(); ++i) poly[i % n] += poly[i];
        poly.resize(n);
    }
    const IntPoly& phi = cyclotomic_polynomial(order);
    const int deg = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(poly.size()) - 1; i >= deg; --i) {
        if (poly[i].is_zero()) continue;
        Rational c = poly[i];
        for (int j = 0; j < deg; ++j) {
            if (phi[j] != 0) poly[i - deg + j].sub_mul(c, Rational(phi[j]));
        }
        poly[i] = Rational();
    }
    poly.resize(deg);
    return poly;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int order) {
    checked_order(order);
    thread_local std::unordered_map<int, IntPoly> cache;
    if (auto it = cache.find(order); it != cache.end()) return it->second;
    IntPoly num(order + 1, 0);
    num[0] = -1;
    num[order] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) num = divide_monic(num, cyclotomic_polynomial(d));
    }
    return cache.emplace(order, std::move(num)).first->second;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Cyclotomic Cyclotomic::from_reduced(int order, std::vector<Rational> coeffs) {
    Cyclotomic out;
    out.order_ = order;
    if (coeffs.empty()) coeffs.emplace_back();
    out.c0_ = std::move(coeffs[0]);
    out.rest_.assign(std::make_move_iterator(coeffs.begin() + 1), std::make_move_iterator(coeffs.end()));
    out.normalize();
    return out;
}

void Cyclotomic::normalize() {
    for (const auto& c : rest_) {
        if (!c.is_zero()) return;
    }
    rest_.clear();
    order_ = 1;
}

std::vector<Rational> Cyclotomic::coefficients() const {
    std::vector<Rational> out;
    out.reserve(rest_.size() + 1);
    out.push_back(c0_);
    out.insert(out.end(), rest_.begin(), rest_.end());
    return out;
}

Cyclotomic Cyclotomic::zeta(int order, std::int64_t exponent) {
    checked_order(order);
    std::int64_t a = mod_floor(exponent, order);
    if (a == 0) return Cyclotomic(1);
    std::vector<Rational> poly(static_cast<std::size_t>(a) + 1);
    poly[a] = Rational(1);
    return from_reduced(order, reduce(order, std::move(poly)));
}

Cyclotomic Cyclotomic::from_power_coefficients(int order, std::span<const Rational> coeffs) {
    checked_order(order);
    std::vector<Rational> poly(coeffs.begin(), coeffs.end());
    return from_reduced(order, reduce(order, std::move(poly)));
}

Cyclotomic Cyclotomic::embedded(int order) const {
    checked_order(order);
    if (order % order_ != 0) throw Error(Errc::InvalidArgument, "embedding order must be a multiple of the current order");
    if (order == order_) return *this;
    if (is_rational()) return *this; // rationals are order 1 by normalization
    const int step = order / order_;
    std::vector<Rational> poly(static_cast<std::size_t>(rest_.size()) * step + 1);
    poly[0] = c0_;
    for (std::size_t a = 0; a < rest_.size(); ++a) poly[(a + 1) * step] = rest_[a];
    Cyclotomic out;
    out.order_ = order;
    auto red = reduce(order, std::move(poly));
    out.c0_ = std::move(red[0]);
    out.rest_.assign(red.begin() + 1, red.end());
    return out; // not normalized: caller asked for this order explicitly
}

Cyclotomic Cyclotomic::conj() const {
    if (is_rational()) return *this;
    std::vector<Rational> poly(order_);
    poly[0] = c0_;
    for (std::size_t a = 0; a < rest_.size(); ++a) poly[order_ - (a + 1)] = rest_[a];
    return from_reduced(order_, reduce(order_, std::move(poly)));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (rhs.is_rational()) {
        c0_ += rhs.c0_;
        return *this;
    }
    if (is_rational()) {
        Rational mine = std::move(c0_);
        *this = rhs;
        c0_ += mine;
        return *this;
    }
    const int m = std::lcm(order_, rhs.order_);
    Cyclotomic a = embedded(m);
    Cyclotomic b = rhs.embedded(m);
    a.c0_ += b.c0_;
    for (std::size_t i = 0; i < a.rest_.size(); ++i) a.rest_[i] += b.rest_[i];
    a.normalize();
    *this = std::move(a);
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        *this = Cyclotomic();
        return *this;
    }
    c0_ *= rhs;
    for (auto& c : rest_) c *= rhs;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& rhs) {
    c0_ /= rhs;
    for (auto& c : rest_) c /= rhs;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (rhs.is_rational()) return *this *= rhs.c0_;
    if (is_rational()) {
        Rational mine = std::move(c0_);
        *this = rhs;
        return *this *= mine;
    }
    const int m = std::lcm(order_, rhs.order_);
    const auto a = embedded(m).coefficients();
    const auto b = rhs.embedded(m).coefficients();
    std::vector<Rational> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j].add_mul(a[i], b[j]);
    }
    *this = from_reduced(m, reduce(m, std::move(prod)));
    return *this;
}

void Cyclotomic::add_mul(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() && b.is_rational()) {
        c0_.add_mul(a.c0_, b.c0_);
        return;
    }
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
}

void Cyclotomic::sub_mul(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() && b.is_rational()) {
        c0_.sub_mul(a.c0_, b.c0_);
        return;
    }
    if (a.is_zero() || b.is_zero()) return;
    *this -= a * b;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out;
    out.order_ = order_;
    out.c0_ = -c0_;
    out.rest_.reserve(rest_.size());
    for (const auto& c : rest_) out.rest_.push_back(-c);
    return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.c0_ == b.c0_;
    if (a.order_ == b.order_) return a.c0_ == b.c0_ && a.rest_ == b.rest_;
    const int m = std::lcm(a.order_, b.order_);
    Cyclotomic x = a.embedded(m);
    Cyclotomic y = b.embedded(m);
    return x.c0_ == y.c0_ && x.rest_ == y.rest_;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c0_.to_string();
    std::string body;
    auto coeffs = coefficients();
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        const Rational& c = coeffs[a];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (body.empty()) {
            if (neg) body += "-";
        } else {
            body += neg ? " - " : " + ";
        }
        std::string mono = a == 0 ? "" : (a == 1 ? "z" : "z^" + std::to_string(a));
        if (mono.empty()) body += mag.to_string();
        else if (mag.is_one()) body += mono;
        else body += mag.to_string() + "*" + mono;
    }
    return "zeta" + std::to_string(order_) + "(" + body + ")";
}

Cyclotomic Cyclotomic::parse(std::string_view text) {
    auto bad = [&] { return Error(Errc::ParseError, "not a cyclotomic: '" + std::string(text) + "'"); };
    if (text.rfind("zeta", 0) != 0) return Cyclotomic(Rational::parse(text));
    std::size_t open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')') throw bad();
    int order = 0;
    for (std::size_t i = 4; i < open; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
        order = order * 10 + (text[i] - '0');
    }
    if (order < 1) throw bad();
    std::string body;
    for (char ch : text.substr(open + 1, text.size() - open - 2)) {
        if (ch != ' ') body += ch;
    }
    std::vector<Rational> poly;
    std::size_t pos = 0;
    while (pos < body.size()) {
        bool neg = false;
        if (body[pos] == '+' || body[pos] == '-') {
            neg = body[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < body.size() && body[end] != '+' && body[end] != '-') ++end;
        std::string term = body.substr(pos, end - pos);
        if (term.empty()) throw bad();
        Rational coeff(1);
        std::size_t exponent = 0;
        std::size_t zpos = term.find('z');
        if (zpos == std::string::npos) {
            coeff = Rational::parse(term);
        } else {
            if (zpos > 0) {
                if (term[zpos - 1] != '*') throw bad();
                coeff = Rational::parse(term.substr(0, zpos - 1));
            }
            std::string tail = term.substr(zpos + 1);
            if (tail.empty()) exponent = 1;
            else if (tail[0] == '^' && tail.size() > 1) exponent = std::stoul(tail.substr(1));
            else throw bad();
        }
        if (poly.size() <= exponent) poly.resize(exponent + 1);
        poly[exponent] += neg ? -coeff : coeff;
        pos = end;
    }
    return from_power_coefficients(order, poly);
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& value) { return os << value.to_string(); }

} // namespace equigo
