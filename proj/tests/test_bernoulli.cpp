#include <cmath>

#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace barnes;

TEST_CASE("table layout and signs") {
    const auto& t = BernoulliTable::instance();
    CHECK(t.max_index() == 64);
    CHECK(t(0) == 1.0);
    CHECK(t(1) == -0.5);
    for (int n = 3; n <= 64; n += 2) CHECK(t(n) == 0.0);
    for (int n = 1; n <= 32; ++n) {
        const double sign = (n % 2) ? 1.0 : -1.0;
        CHECK(sign * t(2 * n) > 0.0);
    }
    CHECK_THROWS_AS(bernoulli_number(65), RangeError);
    CHECK_THROWS_AS(bernoulli_number(-1), RangeError);
}

TEST_CASE("small Bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1.0);
    CHECK(bernoulli_number(3) == 0.0);
    CHECK(bernoulli_number(4) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(bernoulli_number(6) == doctest::Approx(1.0 / 42.0).epsilon(1e-15));
}

TEST_CASE("agrees with exact tangent-number values") {
    const auto ref = oracle::bernoulli_from_tangent_numbers(15);
    for (int n = 0; n <= 30; ++n) {
        const double r = static_cast<double>(ref[n]);
        CHECK(std::fabs(bernoulli_number(n) - r) <= 1e-12 * std::max(1.0, std::fabs(r)));
    }
}

TEST_CASE("defining recurrence residual") {
    for (int n = 1; n <= 30; ++n) {
        long double sum = 0.0L, largest = 0.0L, binom = 1.0L;
        for (int k = 0; k <= n; ++k) {
            const long double term = binom * bernoulli_number(k);
            sum += term;
            largest = std::max(largest, std::fabs(term));
            binom = binom * (n + 1 - k) / (k + 1);
        }
        CHECK(static_cast<double>(std::fabs(sum)) <= 1e-12 * static_cast<double>(largest));
    }
}

TEST_CASE("Bernoulli polynomials") {
    CHECK(bernoulli_poly(3, 0.0) == doctest::Approx(0.0));
    CHECK(std::fabs(bernoulli_poly(3, 0.5)) < 1e-16);
    CHECK(bernoulli_poly(2, 0.25) == doctest::Approx(oracle::b2(0.25)).epsilon(1e-15));
    for (double x = 0.0; x <= 1.0; x += 0.05) {
        CHECK(std::fabs(bernoulli_poly(2, x) - oracle::b2(x)) < 1e-15);
        CHECK(std::fabs(bernoulli_poly(3, x) - oracle::b3(x)) < 1e-15);
        CHECK(std::fabs(bernoulli_poly(4, x) - oracle::b4(x)) < 1e-15);
    }
}

TEST_CASE("reflection B_n(1-x) = (-1)^n B_n(x)") {
    for (int n = 0; n <= 20; ++n) {
        for (int i = 0; i <= 10; ++i) {
            const double x = 0.1 * i;
            const double a = bernoulli_poly(n, x);
            const double b = ((n % 2) ? -1.0 : 1.0) * bernoulli_poly(n, 1.0 - x);
            CHECK(std::fabs(a - b) < 1e-12 * std::max(1.0, std::fabs(a)));
        }
    }
}

TEST_CASE("series coefficients") {
    CHECK(series_coefficient(1) == doctest::Approx(-1.0 / 720.0).epsilon(1e-15));
    CHECK(series_coefficient(2) == doctest::Approx(1.0 / 5040.0).epsilon(1e-15));
    for (int n = 1; n <= 20; ++n) {
        const double sign = (n % 2) ? -1.0 : 1.0;
        CHECK(sign * series_coefficient(n) > 0.0);
    }
}

TEST_CASE("zeta values and tails") {
    const double pi = oracle::pi;
    CHECK(zeta_even(2) == doctest::Approx(pi * pi / 6.0).epsilon(1e-15));
    CHECK(zeta_even(4) == doctest::Approx(std::pow(pi, 4) / 90.0).epsilon(1e-15));
    for (int s : {4, 6, 10, 20, 30}) {
        for (long k0 : {0L, 1L, 3L, 12L}) {
            long double direct = 0.0L;
            const long kk = 200000;
            for (long k = kk; k > k0; --k) direct += std::pow(static_cast<long double>(k), -s);
            // integral tail beyond kk
            direct += std::pow(kk + 0.5L, 1.0L - s) / (s - 1.0L);
            const double d = static_cast<double>(direct);
            CHECK(std::fabs(zeta_tail(s, k0) - d) <= 1e-14 * d + 1e-300);
        }
    }
}

TEST_CASE("sup bound on Bernoulli polynomials") {
    for (int n = 2; n <= 21; ++n) {
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i) worst = std::max(worst, std::fabs(bernoulli_poly(n, i / 1000.0)));
        CHECK(worst <= bernoulli_poly_sup(n));
    }
}

TEST_CASE("integral representation of the Bernoulli numbers") {
    // (-1)^{n+1}/pi int_0^inf t^{2n} log(1 - e^{-2 pi t}) dt = B_{2n+2}/((2n+1)(2n+2))
    for (int n = 1; n <= 3; ++n) {
        auto f = [n](long double t) {
            return std::pow(t, 2 * n) * std::log(-std::expm1(-2.0L * std::numbers::pi_v<long double> * t));
        };
        // t^{2n} log t is tame at 0; Simpson on a split grid
        long double integral = oracle::simpson(f, 1e-12L, 1.0L, 200000) + oracle::simpson(f, 1.0L, 12.0L, 200000);
        const double lhs = static_cast<double>(((n % 2) ? 1.0L : -1.0L) * integral / std::numbers::pi_v<long double>);
        const double rhs = bernoulli_number(2 * n + 2) / ((2 * n + 1.0) * (2 * n + 2.0));
        CHECK(std::fabs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("constants") {
    CHECK(std::fabs(kConstants.log_A - 0.24875447) < 1e-8);
    CHECK(std::fabs(kConstants.euler_gamma - 0.57721566) < 1e-8);
    CHECK(std::fabs(kConstants.log_A - oracle::log_glaisher) < 1e-15);
    CHECK(std::fabs(log_glaisher_from_zeta_derivative() - kConstants.log_A) < 1e-10);
    const double from_reference = (oracle::euler_gamma + std::log(2 * oracle::pi)) / 12.0 -
                                  oracle::zeta_prime_2 / (2 * oracle::pi * oracle::pi);
    CHECK(std::fabs(from_reference - kConstants.log_A) < 1e-14);
}
