#include "holey/arith.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace holey;

TEST_CASE("binomial with zero extension") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-3, 1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("Pascal recurrence holds for every k") {
    for (long n = 1; n <= 30; ++n)
        for (long k = -3; k <= n + 3; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("large values do not overflow") {
    Integer big = binomial(1000, 500);
    CHECK(mpz_sizeinbase(big.get_mpz_t(), 10) == 300);
    CHECK(factorial(30) == Integer("265252859812191058636308480000000"));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3, 2) == 12);
    CHECK(pochhammer(Rational(7, 2), 0) == 1);
    CHECK(pochhammer(-2, 4) == 0);
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer step recurrence") {
    testing::ParameterSampler s(11);
    for (int t = 0; t < 200; ++t) {
        Rational a = s.rational();
        long b = s.length(8);
        CHECK(pochhammer(a, b + 1) == pochhammer(a, b) * (a + b));
    }
}

TEST_CASE("gamma ratio at integers") {
    CHECK(gamma_ratio({5}, {3}) == 12);
    CHECK(gamma_ratio({3}, {0}) == 0);
    CHECK_THROWS_AS(gamma_ratio({0}, {2}), GammaPole);
    // equal pole counts: Gamma(0)/Gamma(-1) is the limit of Gamma(x)/Gamma(x-1) = x-1
    CHECK(gamma_ratio({0}, {-1}) == -1);
    CHECK(gamma_ratio({-2}, {-4}) == 12);
    CHECK(gamma_ratio({}, {}) == 1);
}

TEST_CASE("terminating series") {
    CHECK(hyp_terminating({-1, 2}, {3}, 1) == Rational(1, 3));
    CHECK(hyp_terminating({Rational(1, 2), 7}, {3}, 0) == 1);
    CHECK(hyp_terminating({-2, 1}, {1}, 1) == 0);
    CHECK(termination_index({-3, Rational(1, 2)}) == 3);
    CHECK(termination_index({Rational(1, 2)}) == -1);
    CHECK_THROWS_AS(hyp_terminating({Rational(1, 2), 1}, {2}, 1), SeriesError);
    CHECK_THROWS_AS(hyp_terminating({-3, 1}, {-1}, 1), SeriesError);
    // the denominator pole lies beyond the last nonzero term
    CHECK(hyp_terminating({-1, 1}, {-2}, 1) == Rational(3, 2));
}

TEST_CASE("series agrees with a backwards independent summation") {
    testing::ParameterSampler s(5);
    int compared = 0;
    while (compared < 200) {
        long N = s.length(7);
        std::vector<Rational> num{-N, s.rational(), s.rational()}, den{s.rational(), s.rational()};
        if (testing::degenerate(den) || testing::degenerate({num[1], num[2]})) continue;
        Rational z = s.rational();
        CHECK(hyp_terminating(num, den, z) == testing::series_backwards(num, den, z, N));
        ++compared;
    }
}

TEST_CASE("product formulas") {
    CHECK(product_formula(Product::box, 1, 1) == 3);
    CHECK(product_formula(Product::box, 2, 1) == 20);
    CHECK(product_formula(Product::transpose_complement, 2, 1) == 2);
    CHECK(product_formula(Product::vertical_symmetric, 2, 1) == 10);
    for (long n = 1; n <= 6; ++n)
        for (long m = 1; m <= 3; ++m) CHECK(Rational(product_formula(Product::box, n, m)) == testing::box_triple_product(n, m));
    CHECK(parse_product("tc") == Product::transpose_complement);
    CHECK_THROWS(parse_product("nope"));
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(sign(Rational(-1, 3)) == -1);
    CHECK(is_integer(Rational(8) / 4));
    CHECK_FALSE(is_integer(Rational(3) / 4));
    CHECK(to_string(Rational(-6) / 4) == "-3/2");
    CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("very-well-poised 5F4 summation") {
    auto t = testing::check_five_four(101, 200);
    CHECK(t.checked == 200);
    CHECK(t.agreed == t.checked);
}

TEST_CASE("balanced 4F3 transformation") {
    auto t = testing::check_four_three(202, 200);
    CHECK(t.checked == 200);
    CHECK(t.agreed == t.checked);
}

TEST_CASE("7F6 to 4F3 reduction") {
    auto t = testing::check_seven_six(303, 200);
    CHECK(t.checked == 200);
    CHECK(t.agreed == t.checked);
}
