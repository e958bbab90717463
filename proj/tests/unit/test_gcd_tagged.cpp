#include <random>

#include "doctest.h"
#include "equigo/series.hpp"
#include "support.hpp"

using namespace equigo;

namespace {

GcdTaggedSeries random_tagged(std::mt19937& rng, int trunc) {
    GcdTaggedSeries s(trunc);
    std::uniform_int_distribution<int> tag(0, 12);
    for (int i = 0; i < 3; ++i) s.add_part(tag(rng), equigo::testing::random_series(rng, trunc, 4, true));
    return s;
}

} // namespace

TEST_SUITE("gcd_tagged") {

TEST_CASE("gcd tags") {
    CHECK(gcd_tag(0, 5) == 5);
    CHECK(gcd_tag(6, 4) == 2);
    CHECK(gcd_tag(0, 0) == 0);
}

TEST_CASE("odot examples") {
    const int T = 6;
    GcdTaggedSeries a(T);
    a.add_term({0, 1, 1}, 2, Cyclotomic(1));
    GcdTaggedSeries b(T);
    b.add_term({0, 1, 0}, 4, Cyclotomic(1));
    const auto ab = odot_mul(a, b);
    CHECK(ab.coeff({0, 2, 1}, 2) == Cyclotomic(1));
    CHECK(ab.parts().size() == 1);

    GcdTaggedSeries c(T);
    c.add_term({2, 0, 0}, 6, Cyclotomic(1));
    GcdTaggedSeries d(T);
    d.add_term({3, 0, 0}, 4, Cyclotomic(1));
    CHECK(odot_mul(c, d).coeff({5, 0, 0}, 2) == Cyclotomic(1));

    CHECK(odot_mul(a, GcdTaggedSeries::identity(T)) == a);
}

TEST_CASE("odot is commutative and associative") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_tagged(rng, 5);
        const auto b = random_tagged(rng, 5);
        const auto c = random_tagged(rng, 5);
        CHECK(odot_mul(a, b) == odot_mul(b, a));
        CHECK(odot_mul(odot_mul(a, b), c) == odot_mul(a, odot_mul(b, c)));
    }
}

TEST_CASE("Euler operator then collapse") {
    const int T = 3;
    GcdTaggedSeries s(T);
    s.add_term({1, 0, 0}, 2, Cyclotomic(3));
    s.add_term({1, 0, 0}, 0, Cyclotomic(100));
    s.add_term({2, 1, 0}, 1, Cyclotomic(5));
    const TruncatedSeries out = euler_w_4_then_collapse(s);
    CHECK(out.coeff({1, 0, 0}) == Cyclotomic(48));
    CHECK(out.coeff({2, 1, 0}) == Cyclotomic(5));
    CHECK(out.term_count() == 2);
}

}
