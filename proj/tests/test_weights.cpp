#include "doctest.h"

#include <numeric>

#include "gkfol/weights.hpp"

using namespace gkfol;

TEST_CASE("normalize_weights sorts and reduces") {
    CHECK(normalize_weights({4, 2, 1}).p == std::vector<Int>{4, 2, 1});
    CHECK(normalize_weights({8, 4, 2}).p == std::vector<Int>{4, 2, 1});
    CHECK(normalize_weights({4, 6, 7}).p == std::vector<Int>{7, 6, 4});
    CHECK_THROWS_AS(normalize_weights({2, 2, 1}), DuplicateWeights);
    CHECK_THROWS_AS(normalize_weights({6, 3, 6}), DuplicateWeights);
    CHECK_THROWS_AS(normalize_weights({2, 1}), TooFewWeights);
}

TEST_CASE("derive_params evaluates the parameter formulas") {
    {
        ParamSet ps = derive_params(normalize_weights({4, 2, 1}), 3, 2);
        CHECK(ps.tau == 10);
        CHECK(ps.tau_i == std::vector<Int>{10, 0, 5});
        CHECK(ps.lambda_i == std::vector<Int>{1, 1, 2});
        CHECK(ps.p_bar == std::vector<Int>{4, 3, 2});
    }
    {
        ParamSet ps = derive_params(normalize_weights({7, 6, 4}), 8, 2);
        CHECK(ps.tau == 25);
        CHECK(ps.tau_i == std::vector<Int>{10, -5, 5});
        CHECK(ps.lam(1) == -1);
        CHECK(ps.p_bar == std::vector<Int>{7, 3, 1});
    }
    {
        ParamSet ps = derive_params(normalize_weights({3, 2, 1}), 0, 1);
        CHECK(ps.tau == 6);
        CHECK(ps.tau_i == std::vector<Int>{6, -2, 2});
        CHECK(ps.lambda_i == std::vector<Int>{0, 0, 0});
        CHECK(ps.p_bar == std::vector<Int>{3, 2, 1});
    }
}

TEST_CASE("check_condition with the index shift and p_{n+1} = 0") {
    ParamSet ps = derive_params(normalize_weights({7, 6, 4}), 8, 2);
    CHECK(check_condition(ps, {1, 2}));  // p_3 + lambda = 12 = p_2 d
    CHECK(check_condition(ps, {2, 3}));  // p_4 + lambda = 8 = p_3 d, p_4 = 0
    ParamSet ps2 = derive_params(normalize_weights({4, 2, 1}), 3, 2);
    CHECK_FALSE(check_condition(ps2, {1, 1}));
    CHECK_THROWS_AS(check_condition(ps2, {3, 1}), InvalidInput);
}

TEST_CASE("bar involution") {
    ParamSet ps = derive_params(normalize_weights({7, 6, 4}), 8, 2);
    ParamSet bar = bar_involution(ps);
    CHECK(bar.weights.p == std::vector<Int>{7, 3, 1});
    CHECK(bar.lambda == -1);
    CHECK(bar_involution(bar) == ps);

    ParamSet ps2 = derive_params(normalize_weights({6, 5, 2}), 4, 2);
    CHECK(bar_involution(bar_involution(ps2)) == ps2);

    ParamSet fixed = derive_params(normalize_weights({3, 2, 1}), 0, 1);
    CHECK(bar_involution(fixed) == fixed);
}

TEST_CASE("bar involution is an involution on a small sweep and keeps gcd 1") {
    for (Int p1 = 3; p1 <= 9; ++p1)
        for (Int p2 = 2; p2 < p1; ++p2)
            for (Int p3 = 1; p3 < p2; ++p3) {
                if (std::gcd(std::gcd(p1, p2), p3) != 1) continue;
                for (Int lambda : {-3, 0, 2, 7})
                    for (Int d : {1, 2, 3}) {
                        ParamSet ps = derive_params(WeightVector{{p1, p2, p3}}, lambda, d);
                        // strictly decreasing positive flip with gcd 1
                        ParamSet bar = bar_involution(ps);
                        CHECK(bar.weights.p[0] > bar.weights.p[1]);
                        CHECK(bar.weights.p[1] > bar.weights.p[2]);
                        CHECK(bar.weights.p[2] >= 1);
                        Int g = std::gcd(std::gcd(bar.weights.p[0], bar.weights.p[1]),
                                         bar.weights.p[2]);
                        CHECK(g == 1);
                        CHECK(bar_involution(bar) == ps);
                        // lambda + lambda_1 = p_1 (d-1)
                        CHECK(ps.lambda + ps.lam(1) == ps.p(1) * (d - 1));
                    }
            }
}

TEST_CASE("condition flip symmetry c_ij <-> bar c_{n-i, n-j+1}") {
    for (Int lambda : {2, 3, 8})
        for (Int d : {1, 2, 3}) {
            ParamSet ps = derive_params(normalize_weights({7, 6, 4}), lambda, d);
            ParamSet bar = bar_involution(ps);
            const int n = ps.n();
            for (int i = 1; i <= n - 1; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(check_condition(ps, {i, j}) ==
                          check_condition(bar, {n - i, n - j + 1}));
        }
}

TEST_CASE("milnor number product formula") {
    CHECK(milnor_number({1, 1, 1}, 1) == mpq_class(8));
    CHECK(milnor_number({7, 6, 4}, 8) == mpq_class(15));
    CHECK(milnor_number({4, 2, 1}, 3) == mpq_class(35, 2));
    CHECK(milnor_number({15, 14, 12, 8}, 16) == mpq_class(31));
    CHECK(milnor_number({6, 5, 2}, 4) == mpq_class(9));
}
