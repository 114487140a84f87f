#include <numbers>

#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace funclass;
using funclass::testing::from_zero;
using funclass::testing::sample_expr;

TEST_CASE("minorant_bruteforce examples") {
    const auto sq = sample_expr("x^2", 0.0, 0.25, 5);
    // partitions of 4: {4} 1, {3,1} 0.625, {2,2} 0.5, {2,1,1} 0.375, {1,1,1,1} 0.25
    CHECK(oracle::minorant_bruteforce(sq, 4) == 0.25);
    CHECK(oracle::minorant_bruteforce(sq, 1) == sq[1]);
    CHECK(oracle::minorant_bruteforce(sq, 0) == sq[0]);
    const auto one = from_zero({1, 1, 1, 1}, 1.0);
    CHECK(oracle::minorant_bruteforce(one, 3) == 1.0);
    const auto f = from_zero({0, 5, 1, 9, 8}, 1.0);
    CHECK(oracle::minorant_bruteforce(f, 3) == 6.0);  // {2,1}
    CHECK(oracle::minorant_bruteforce(f, 4) == 2.0);  // {2,2}
}

TEST_CASE("partition_defect_bruteforce") {
    CHECK(oracle::partition_defect_bruteforce(sample_expr("x^2", 0.0, 0.25, 5)) == 0.75);
    CHECK(oracle::partition_defect_bruteforce(sample_expr("sqrt(x)", 0.0, 0.25, 5)) == 0.0);
}

TEST_CASE("oracle size caps") {
    const auto big = from_zero(std::vector<double>(16, 1.0), 1.0);
    CHECK_THROWS_AS(oracle::minorant_bruteforce(big, 3), std::invalid_argument);
    CHECK_THROWS_AS(oracle::partition_defect_bruteforce(big), std::invalid_argument);
    const auto ok = from_zero(std::vector<double>(15, 1.0), 1.0);
    CHECK(oracle::minorant_bruteforce(ok, 14) == 1.0);
    CHECK_THROWS_AS(oracle::minorant_bruteforce(ok, 15), std::invalid_argument);
    CHECK_THROWS_AS(oracle::minorant_bruteforce(GridFunction(1.0, 1.0, {1, 1}), 1), std::invalid_argument);
}

TEST_CASE("periodic_check_bruteforce examples") {
    const auto f = sample_expr("x + 0.3*sin(2*pi*x)", 0.0, 0.05, 61);
    CHECK(oracle::periodic_check_bruteforce(f, PeriodSpec{1.0, 20}));
    const auto g = sample_expr("x + sin(2*pi*x)", 0.0, 0.05, 61);
    CHECK_FALSE(oracle::periodic_check_bruteforce(g, PeriodSpec{1.0, 20}));
    CHECK(oracle::periodic_check_bruteforce(sample_expr("x", 0.0, 0.05, 61), PeriodSpec{0.05, 1}));
}

TEST_CASE("monotone scan oracles") {
    const auto f = from_zero({3, 1, 4, 1, 5}, 1.0);
    CHECK(oracle::suffix_min_bruteforce(f) == std::vector<double>{1, 1, 1, 1, 5});
    CHECK(oracle::prefix_max_bruteforce(f) == std::vector<double>{3, 3, 4, 4, 5});
}

TEST_CASE("center_check_hires examples") {
    const auto cube = expr::parse("x^3");
    CHECK(oracle::center_check_hires(cube, -1.0, 0.125, 17, 8, 4));
    CHECK_FALSE(oracle::center_check_hires(cube, -1.0, 0.125, 17, 16, 4));
    const auto sq = expr::parse("x^2");
    for (std::size_t p = 0; p < 9; ++p) CHECK(oracle::center_check_hires(sq, -1.0, 0.25, 9, p, 4));
}
