#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diffrep/fractional.hpp"

using namespace diffrep;
using std::numbers::pi;

TEST_CASE("order derives n and c_alpha") {
    const FractionalOrder half = make_order(0.5);
    CHECK(half.n == 1);
    CHECK(half.c_alpha == doctest::Approx(1.0 / pi).epsilon(1e-14));

    // product form evaluated directly: sin(2.5 pi) * (1/(1-2.5)) * (1/(2-2.5)) / pi
    const FractionalOrder big = make_order(2.5);
    CHECK(big.n == 3);
    const double expected = std::sin(2.5 * pi) / pi / (1.0 - 2.5) / (2.0 - 2.5);
    CHECK(expected == doctest::Approx(4.0 / (3.0 * pi)).epsilon(1e-14));
    CHECK(big.c_alpha == doctest::Approx(expected).epsilon(1e-14));

    const FractionalOrder quarter = make_order(0.25);
    CHECK(quarter.n == 1);
    CHECK(quarter.c_alpha ==
          doctest::Approx(std::sqrt(2.0) / (2.0 * pi)).epsilon(1e-14));
}

TEST_CASE("order rejects integers and non-positive values") {
    CHECK_THROWS_AS(make_order(1.0), IntegerOrderError);
    CHECK_THROWS_AS(make_order(3.0), IntegerOrderError);
    CHECK_THROWS_AS(make_order(2.0 + 1e-13), IntegerOrderError);
    CHECK_THROWS_AS(make_order(0.0), NonPositiveOrderError);
    CHECK_THROWS_AS(make_order(-0.5), NonPositiveOrderError);
    CHECK_THROWS_AS(make_order(1e-15), IntegerOrderError);
}

TEST_CASE("order bracket property") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    int checked = 0;
    while (checked < 10000) {
        const double alpha = dist(rng);
        if (alpha <= 0.0 || std::abs(alpha - std::round(alpha)) <= 1e-12) continue;
        const FractionalOrder o = make_order(alpha);
        CHECK(o.n - 1 < alpha);
        CHECK(alpha < o.n);
        ++checked;
    }
}

TEST_CASE("gamma special values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    // reflection at z = 1/2 forces Gamma(1/2)^2 = pi
    CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160273).epsilon(1e-13));
}

TEST_CASE("gamma matches libm") {
    for (double x = 0.1; x <= 30.0; x += 0.0917) {
        CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(5e-13));
    }
}

TEST_CASE("gamma functional equation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 20.0);
    for (int i = 0; i < 10000; ++i) {
        const double z = dist(rng);
        const double lhs = z * gamma_fn(z);
        const double rhs = gamma_fn(z + 1.0);
        CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
    }
}

TEST_CASE("gamma reflection formula") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(1e-3, 1.0 - 1e-3);
    for (int i = 0; i < 2000; ++i) {
        const double z = dist(rng);
        const double lhs = 1.0 / gamma_fn(z);
        const double rhs = std::sin(pi * z) / pi * gamma_fn(1.0 - z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-1.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-7.0), PoleError);
    CHECK_NOTHROW(gamma_fn(-0.5));
}

TEST_CASE("alternating binomial sum vanishes") {
    CHECK(binom_alternating_sum(2, 0) == 0);
    // direct summation: C(5,3)C(3,3) - C(5,4)C(4,3) + C(5,5)C(5,3) = 10 - 20 + 10
    CHECK(10 - 5 * 4 + 1 * 10 == 0);
    CHECK(binom_alternating_sum(5, 3) == 0);
    CHECK(binom_alternating_sum(12, 7) == 0);

    for (int n = 1; n <= 20; ++n) {
        for (int mu = 0; mu < n; ++mu) {
            CAPTURE(n);
            CAPTURE(mu);
            CHECK(binom_alternating_sum(n, mu) == 0);
        }
    }
}

TEST_CASE("alternating binomial sum range checks") {
    CHECK_THROWS_AS(binom_alternating_sum(5, 5), RangeError);
    CHECK_THROWS_AS(binom_alternating_sum(5, -1), RangeError);
    CHECK_THROWS_AS(binom_alternating_sum(0, 0), RangeError);
    CHECK_THROWS_AS(binom_alternating_sum(61, 0), RangeError);
}

TEST_CASE("power closed form") {
    const FractionalOrder half = make_order(0.5);
    // J^(1/2) of 1 at t=1 is 1/Gamma(3/2) = 2/sqrt(pi)
    CHECK(rl_power_closed_form(half, 0.0, 0.0, 1.0) ==
          doctest::Approx(1.1283791670955126).epsilon(1e-13));
    // J^(1/2) of t at t=1 is 1/Gamma(5/2) = 4/(3 sqrt(pi))
    CHECK(rl_power_closed_form(half, 1.0, 0.0, 1.0) ==
          doctest::Approx(4.0 / (3.0 * std::sqrt(pi))).epsilon(1e-13));
    CHECK(rl_power_closed_form(half, 2.0, 1.0, 1.0) == 0.0);
    CHECK(rl_power_closed_form(make_order(2.5), 1.5, -1.0, -1.0) == 0.0);
    CHECK_THROWS_AS(rl_power_closed_form(half, 0.0, 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(rl_power_closed_form(half, -1.0, 0.0, 1.0), DomainError);
}
