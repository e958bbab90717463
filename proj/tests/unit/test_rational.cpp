#include <limits>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "equigo/error.hpp"
#include "equigo/rational.hpp"

using equigo::Rational;

TEST_SUITE("rational") {

TEST_CASE("values are reduced with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse round-trips canonical strings") {
    for (const char* text : {"0", "7", "-7", "22/7", "-1/3", "-123456789012345678901234567890/11"}) {
        CHECK(Rational::parse(text).to_string() == text);
    }
    CHECK(Rational::parse("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(Rational::parse("1/"), equigo::Error);
    CHECK_THROWS_AS(Rational::parse("abc"), equigo::Error);
}

TEST_CASE("arithmetic agrees with GMP on values straddling the int64 boundary") {
    std::mt19937_64 rng(7);
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> pool = {0, 1, -1, 2, 3, 7, big, -big, big / 3, std::numeric_limits<std::int64_t>::min()};
    for (int i = 0; i < 30; ++i) pool.push_back(static_cast<std::int64_t>(rng()));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t an = pool[pick(rng)];
        const std::int64_t bn = pool[pick(rng)];
        std::int64_t ad = pool[pick(rng)];
        std::int64_t bd = pool[pick(rng)];
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 3;
        mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
        mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
        qa.canonicalize();
        qb.canonicalize();
        const Rational a(qa);
        const Rational b(qb);
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (qb != 0) CHECK((a / b).to_mpq() == qa / qb);
        CHECK((a < b) == (qa < qb));
        CHECK((a == b) == (qa == qb));
        Rational acc = a;
        acc.add_mul(a, b);
        CHECK(acc.to_mpq() == qa + qa * qb);
    }
}

TEST_CASE("big values demote when they fit again") {
    const Rational huge = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
    CHECK_FALSE(huge.fits_int64());
    const Rational back = huge / Rational(4);
    CHECK(back.fits_int64());
    CHECK(back == Rational(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("division by zero is rejected") {
    Rational a(1);
    CHECK_THROWS_AS(a /= Rational(0), std::domain_error);
}

}
