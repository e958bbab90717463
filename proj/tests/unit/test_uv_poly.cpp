#include <map>
#include <random>

#include "doctest.h"
#include "equigo/error.hpp"
#include "equigo/uv_poly.hpp"

using namespace equigo;

namespace {

UVPoly from_pairs(std::initializer_list<std::tuple<int, int, int>> terms) {
    UVPoly p;
    for (auto [u, v, c] : terms) p.ref(u, v) += Cyclotomic(c);
    return p;
}

UVPoly random_poly(std::mt19937& rng, int extent) {
    UVPoly p;
    std::uniform_int_distribution<int> e(0, extent);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 5; ++i) p.ref(e(rng), e(rng)) += Cyclotomic(c(rng));
    return p;
}

} // namespace

TEST_SUITE("uv_poly") {

TEST_CASE("multiplication matches naive convolution") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const UVPoly a = random_poly(rng, 3);
        const UVPoly b = random_poly(rng, 4);
        std::map<std::pair<int, int>, Cyclotomic> naive;
        a.for_each([&](int u1, int v1, const Cyclotomic& c1) {
            b.for_each([&](int u2, int v2, const Cyclotomic& c2) { naive[{u1 + u2, v1 + v2}] += c1 * c2; });
        });
        const UVPoly prod = a * b;
        for (const auto& [uv, c] : naive) CHECK(prod.at(uv.first, uv.second) == c);
        prod.for_each([&](int u, int v, const Cyclotomic& c) { CHECK(naive[{u, v}] == c); });
    }
}

TEST_CASE("equality ignores grid extents") {
    UVPoly a = from_pairs({{0, 0, 1}});
    UVPoly b = from_pairs({{0, 0, 1}, {3, 3, 0}});
    CHECK(a == b);
    CHECK(b.u_degree() == 0);
    CHECK(UVPoly().u_degree() == -1);
}

TEST_CASE("exact division") {
    const UVPoly e_a = from_pairs({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}) * from_pairs({{0, 0, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}});
    std::mt19937 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const UVPoly q = random_poly(rng, 4) + UVPoly::constant(Cyclotomic(1));
        const auto back = divide_exact(q * e_a, e_a);
        REQUIRE(back.has_value());
        CHECK(*back == q);
    }
    CHECK_FALSE(divide_exact(from_pairs({{0, 0, 1}, {1, 0, 1}}), from_pairs({{0, 0, 1}, {1, 0, -1}})).has_value());
}

TEST_CASE("box inverse") {
    const UVPoly p = from_pairs({{0, 0, 1}, {1, 0, -1}});
    const UVPoly inv = inverse_in_box(p, 5, 1);
    for (int u = 0; u < 5; ++u) CHECK(inv.at(u, 0) == Cyclotomic(1));
    CHECK_THROWS_AS(inverse_in_box(from_pairs({{1, 0, 1}}), 3, 3), Error);
}

TEST_CASE("sign twist, swap and conjugation") {
    UVPoly p = from_pairs({{1, 0, 2}, {1, 1, 3}, {0, 2, 5}});
    const UVPoly t = p.sign_twisted();
    CHECK(t.at(1, 0) == Cyclotomic(-2));
    CHECK(t.at(1, 1) == Cyclotomic(3));
    CHECK(p.swapped().at(2, 0) == Cyclotomic(5));
    p.ref(0, 0) = Cyclotomic::zeta(3, 1);
    CHECK(p.conj().at(0, 0) == Cyclotomic::zeta(3, 2));
    CHECK(p.sum_of_coefficients() == Cyclotomic(10) + Cyclotomic::zeta(3, 1));
}

}
