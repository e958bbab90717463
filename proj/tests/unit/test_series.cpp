#include <random>

#include "doctest.h"
#include "equigo/error.hpp"
#include "equigo/series.hpp"
#include "support.hpp"

using namespace equigo;
using equigo::testing::naive;
using equigo::testing::naive_mul;
using equigo::testing::random_series;

namespace {

TruncatedSeries t_poly(int trunc, std::initializer_list<int> coeffs) {
    std::vector<Cyclotomic> c;
    for (int x : coeffs) c.emplace_back(x);
    return TruncatedSeries::from_t_coefficients(trunc, c);
}

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no equigo::Error thrown");
    return Errc::InvalidArgument;
}

// prod_{m <= T} (1 - t^m)^{-24} by repeated geometric-series multiplication.
std::vector<Rational> k3_euler_reference(int T) {
    std::vector<Rational> c(T + 1);
    c[0] = Rational(1);
    for (int m = 1; m <= T; ++m) {
        for (int rep = 0; rep < 24; ++rep) {
            for (int n = m; n <= T; ++n) c[n] += c[n - m];
        }
    }
    return c;
}

} // namespace

TEST_SUITE("series") {

TEST_CASE("multiplication examples") {
    const int T = 6;
    CHECK(t_poly(T, {1, 24}) * TruncatedSeries::one(T) == t_poly(T, {1, 24}));
    CHECK(inverse(t_poly(T, {1, -1})) * t_poly(T, {1, -1}) == TruncatedSeries::one(T));
    TruncatedSeries a = TruncatedSeries::one(T);
    a.add_term({1, 0, 0}, Cyclotomic::zeta(3, 1));
    TruncatedSeries b = TruncatedSeries::one(T);
    b.add_term({1, 0, 0}, Cyclotomic::zeta(3, 2));
    CHECK(a * b == t_poly(T, {1, -1, 1}));
    CHECK(code_of([&] { (void)mul(TruncatedSeries::one(3), TruncatedSeries::one(4)); }) == Errc::TruncationMismatch);
}

TEST_CASE("multiplication matches the sparse schoolbook product") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int T = 1 + trial % 12;
        const auto a = random_series(rng, T, 8);
        const auto b = random_series(rng, T, 8);
        const auto c = random_series(rng, T, 5);
        CHECK(naive(a * b) == naive_mul(naive(a), naive(b), T));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("terms are sorted and free of zeros") {
    TruncatedSeries s(3);
    s.add_term({2, 1, 0}, Cyclotomic(5));
    s.add_term({0, 3, 1}, Cyclotomic(1));
    s.add_term({2, 1, 0}, Cyclotomic(-5));
    s.add_term({7, 0, 0}, Cyclotomic(1));
    const auto terms = s.terms();
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].first == Monomial{0, 3, 1});
    CHECK(s.variables() == (kVarU | kVarV));
}

TEST_CASE("inverse") {
    const int T = 8;
    const TruncatedSeries geo = inverse(t_poly(T, {1, -1}));
    for (int n = 0; n <= T; ++n) CHECK(geo.coeff({n, 0, 0}) == Cyclotomic(1));
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries a = random_series(rng, T, 10);
        a.mutable_layer(0) = UVPoly::constant(Cyclotomic(Rational(trial % 3 + 1, 2)));
        CHECK(a * inverse(a) == TruncatedSeries::one(T));
    }
    CHECK(code_of([] { (void)inverse(TruncatedSeries(3)); }) == Errc::NonUnitConstantTerm);
    TruncatedSeries with_u = TruncatedSeries::one(3);
    with_u.add_term({0, 1, 0}, Cyclotomic(1));
    CHECK(code_of([&] { (void)inverse(with_u); }) == Errc::NonUnitConstantTerm);
}

TEST_CASE("inverse of a (u, v) constant term inside a box") {
    // (1-u)^2 (1-v)^2 at t^0
    UVPoly f = UVPoly::constant(Cyclotomic(1));
    f.ref(1, 0) = Cyclotomic(-1);
    f.ref(0, 1) = Cyclotomic(-1);
    f.ref(1, 1) = Cyclotomic(1);
    f = f * f;
    TruncatedSeries a(2);
    a.mutable_layer(0) = f;
    a.add_term({1, 1, 1}, Cyclotomic(3));
    const int box = 6;
    const TruncatedSeries inv = inverse(a, box, box);
    const TruncatedSeries prod = a * inv;
    for (int n = 0; n <= 2; ++n) {
        const UVPoly layer = prod.layer(n).truncated(box, box);
        CHECK(layer == (n == 0 ? UVPoly::constant(Cyclotomic(1)) : UVPoly()));
    }
    // 1/(1-u)^2 = sum (i+1) u^i
    for (int i = 0; i < box; ++i) CHECK(inv.coeff({0, i, 0}) == Cyclotomic(i + 1));
}

TEST_CASE("exp and log") {
    const int T = 10;
    TruncatedSeries log_series(T);
    for (int k = 1; k <= T; ++k) {
        for (int m = 1; m * k <= T; ++m) log_series.add_term({m * k, 0, 0}, Cyclotomic(Rational(24, k)));
    }
    const auto reference = k3_euler_reference(T);
    const TruncatedSeries e = exp(log_series);
    for (int n = 0; n <= T; ++n) CHECK(e.coeff({n, 0, 0}) == Cyclotomic(reference[n]));
    CHECK(log(TruncatedSeries::one(T)).is_zero());
    CHECK(exp(-log(t_poly(T, {1, 0, -1}))) == inverse(t_poly(T, {1, 0, -1})));
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries a = random_series(rng, 6, 6);
        TruncatedSeries b = random_series(rng, 6, 6);
        a.mutable_layer(0) = UVPoly();
        b.mutable_layer(0) = UVPoly();
        CHECK(exp(a + b) == exp(a) * exp(b));
        CHECK(log(exp(a)) == a);
        TruncatedSeries c = a + TruncatedSeries::one(6);
        CHECK(exp(log(c)) == c);
    }
    CHECK(code_of([] { (void)exp(TruncatedSeries::one(2)); }) == Errc::BadConstantTerm);
    CHECK(code_of([] { (void)log(TruncatedSeries(2)); }) == Errc::BadConstantTerm);
}

TEST_CASE("t-power substitution") {
    const int T = 9;
    CHECK(substitute_t_power(t_poly(T, {1, 1}), 3) == t_poly(T, {1, 0, 0, 1}));
    std::mt19937 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, T, 8);
        CHECK(substitute_t_power(a, 1) == a);
        CHECK(substitute_t_power(a, 6) == substitute_t_power(substitute_t_power(a, 2), 3));
    }
    TruncatedSeries eta8 = TruncatedSeries::one(T);
    for (int n = 1; n <= T; ++n) {
        for (int r = 0; r < 8; ++r) eta8 = eta8 * inverse(TruncatedSeries::one(T) - TruncatedSeries::monomial(T, {n, 0, 0}, Cyclotomic(1)));
    }
    TruncatedSeries eta8_sq = TruncatedSeries::one(T);
    for (int n = 1; 2 * n <= T; ++n) {
        for (int r = 0; r < 8; ++r) {
            eta8_sq = eta8_sq * inverse(TruncatedSeries::one(T) - TruncatedSeries::monomial(T, {2 * n, 0, 0}, Cyclotomic(1)));
        }
    }
    CHECK(substitute_t_power(eta8, 2) == eta8_sq);
}

TEST_CASE("polynomial-in-monomial kernels agree with generic arithmetic") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int T = 2 + trial % 9;
        const auto a = random_series(rng, T, 10);
        std::vector<Cyclotomic> coeffs{Cyclotomic(1)};
        for (int i = 0; i < 1 + trial % 4; ++i) coeffs.push_back(equigo::testing::random_cyclotomic(rng));
        const Monomial step{1 + trial % 3, trial % 2, (trial / 2) % 3};
        TruncatedSeries p = TruncatedSeries::one(T);
        TruncatedSeries x_power = TruncatedSeries::one(T);
        const TruncatedSeries x = TruncatedSeries::monomial(T, step, Cyclotomic(1));
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            x_power = x_power * x;
            p += x_power * coeffs[i];
        }
        CHECK(multiply_by_polynomial_in(a, coeffs, step) == a * p);
        CHECK(divide_by_polynomial_in(a * p, coeffs, step) == a);
        CHECK(divide_by_polynomial_in(a, coeffs, step) == a * inverse(p));
    }
}

TEST_CASE("truncating early or late gives the same result") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 10, 12);
        auto b = random_series(rng, 10, 12);
        b.mutable_layer(0) = UVPoly::constant(Cyclotomic(1));
        CHECK(truncate(a * b, 5) == truncate(a, 5) * truncate(b, 5));
        CHECK(truncate(inverse(b), 4) == inverse(truncate(b, 4)));
        CHECK(truncate(substitute_t_power(a, 2), 5) == substitute_t_power(truncate(a, 5), 2));
    }
}

TEST_CASE("layer-wise exact division") {
    UVPoly d = UVPoly::constant(Cyclotomic(1));
    d.ref(1, 1) = Cyclotomic(-1);
    TruncatedSeries a(2);
    a.mutable_layer(1) = d * d;
    a.mutable_layer(2) = d;
    const TruncatedSeries q = divide_layers_exact(a, d);
    CHECK(q.layer(1) == d);
    CHECK(q.layer(2) == UVPoly::constant(Cyclotomic(1)));
    a.add_term({2, 0, 0}, Cyclotomic(1));
    CHECK(code_of([&] { (void)divide_layers_exact(a, d); }) == Errc::NonPolynomialQuotient);
}

TEST_CASE("specialization, conjugation and first difference") {
    TruncatedSeries a(2);
    a.add_term({1, 1, 0}, Cyclotomic::zeta(4, 1));
    a.add_term({1, 0, 2}, Cyclotomic(3));
    CHECK(specialize_uv_one(a).coeff({1, 0, 0}) == Cyclotomic(3) + Cyclotomic::zeta(4, 1));
    CHECK(conj(a).coeff({1, 1, 0}) == Cyclotomic::zeta(4, 3));
    CHECK(swap_uv(a).coeff({1, 2, 0}) == Cyclotomic(3));
    CHECK(sign_twist_uv(a).coeff({1, 1, 0}) == -Cyclotomic::zeta(4, 1));
    TruncatedSeries b = a;
    b.add_term({2, 0, 1}, Cyclotomic(1));
    const auto diff = first_difference(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->where == Monomial{2, 0, 1});
    CHECK_FALSE(first_difference(a, a).has_value());
}

TEST_CASE("JSON round trip and canonical form") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 5, 10);
        CHECK(series_from_json(to_json(a)) == a);
        CHECK(to_json(series_from_json(to_json(a))) == to_json(a));
    }
    const auto s = t_poly(2, {1, 24});
    CHECK(to_json(s) == R"({"terms":[{"coeff":"1","t":0,"u":0,"v":0},{"coeff":"24","t":1,"u":0,"v":0}],"trunc":2})");
    CHECK(code_of([] { (void)series_from_json("{"); }) == Errc::ParseError);
    CHECK(code_of([] { (void)series_from_json(R"({"trunc":1})"); }) == Errc::ParseError);
}

}
