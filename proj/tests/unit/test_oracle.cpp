#include <random>

#include "doctest.h"
#include "equigo/goettsche.hpp"
#include "equigo/oracle.hpp"

using namespace equigo;

TEST_SUITE("oracle") {

TEST_CASE("brute symmetric power examples") {
    CHECK(brute_symmetric_power({{0, Cyclotomic(1)}}, 3) == std::map<int, Cyclotomic>{{0, Cyclotomic(1)}});
    CHECK(brute_symmetric_power({{1, Cyclotomic(1)}}, 2).empty());
    const Cyclotomic l = Cyclotomic::zeta(6, 1);
    const auto sq = brute_symmetric_power({{0, Cyclotomic(1)}, {2, l}}, 2);
    CHECK(sq == std::map<int, Cyclotomic>{{0, Cyclotomic(1)}, {2, l}, {4, l * l}});
    CHECK(brute_symmetric_power({{1, Cyclotomic(1)}}, 1) == std::map<int, Cyclotomic>{{1, Cyclotomic(-1)}});
}

TEST_CASE("brute force agrees with the product formula on random graded spaces") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        GradedEigenSpace space;
        std::map<int, std::vector<Cyclotomic>> graded;
        const int dim = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < dim; ++i) {
            const int order = std::uniform_int_distribution<int>(1, 6)(rng);
            const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
            const Cyclotomic l = Cyclotomic::zeta(order, std::uniform_int_distribution<int>(0, order - 1)(rng));
            space.push_back({degree, l});
            graded[degree].push_back(l);
        }
        const TruncatedSeries series = symmetric_power_series(graded, 4);
        for (int k = 0; k <= 4; ++k) {
            UVPoly brute;
            for (const auto& [deg, c] : brute_symmetric_power(space, k)) brute.ref(deg, 0) = c;
            CHECK(brute == series.layer(k));
        }
    }
}

TEST_CASE("cell identity") {
    std::string diagnostic = "unset";
    CHECK(cell_count_identity_check(20, &diagnostic));
    CHECK(diagnostic.empty());
    CHECK(cell_count_identity_check(1));
    TruncatedSeries product = TruncatedSeries::one(4);
    const Cyclotomic one_minus_x[] = {Cyclotomic(1), Cyclotomic(-1)};
    for (int i = 1; i <= 4; ++i) product = divide_by_polynomial_in(std::move(product), one_minus_x, {i, i - 1, 0});
    CHECK(product.coeff({1, 0, 0}) == Cyclotomic(1));
    CHECK(product.coeff({4, 2, 0}) == Cyclotomic(2));
}

}
