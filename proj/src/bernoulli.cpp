#include "barnes/bernoulli.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>

#include "barnes/errors.hpp"
#include "barnes/quadrature.hpp"

namespace barnes {

BernoulliTable::BernoulliTable(int max_index) : max_index_(max_index) {
    if (max_index < 1) throw RangeError("BernoulliTable: max_index must be >= 1");
    // The convolution recurrence loses about a digit every two indices in
    // binary64; Boost's B_{2n} are correctly rounded.
    extended_.assign(static_cast<std::size_t>(max_index) + 1, 0.0L);
    extended_[0] = 1.0L;
    extended_[1] = -0.5L;
    for (int n = 2; n <= max_index; n += 2) {
        extended_[static_cast<std::size_t>(n)] = boost::math::bernoulli_b2n<long double>(n / 2);
    }
    values_.assign(extended_.begin(), extended_.end());
}

const BernoulliTable& BernoulliTable::instance() {
    static const BernoulliTable table;
    return table;
}

double BernoulliTable::operator()(int n) const {
    if (n < 0 || n > max_index_) {
        throw RangeError("bernoulli_number: index " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_index_) + "]");
    }
    return values_[static_cast<std::size_t>(n)];
}

long double BernoulliTable::extended(int n) const {
    if (n < 0 || n > max_index_) {
        throw RangeError("bernoulli_number: index " + std::to_string(n) + " outside [0, " +
                         std::to_string(max_index_) + "]");
    }
    return extended_[static_cast<std::size_t>(n)];
}

double bernoulli_number(int n) { return BernoulliTable::instance()(n); }

double bernoulli_poly(int n, double x) {
    const auto& table = BernoulliTable::instance();
    if (n < 0 || n > table.max_index()) {
        throw RangeError("bernoulli_poly: degree " + std::to_string(n) + " outside table");
    }
    // B_n(x) = (-1)^n B_n(1-x): keep x <= 1/2 so high powers stay small
    long double lx = x;
    long double sign = 1.0L;
    if (x > 0.5) {
        lx = 1.0L - static_cast<long double>(x);
        if (n % 2) sign = -1.0L;
    }
    // Horner in x over sum_k C(n,k) B_k x^{n-k}.
    long double binom = 1.0L;  // C(n, k)
    long double acc = 0.0L;
    for (int k = 0; k <= n; ++k) {
        acc = acc * lx + binom * table.extended(k);
        binom = binom * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
    }
    return static_cast<double>(sign * acc);
}

double series_coefficient(int n) {
    if (n < 1) throw RangeError("series_coefficient: n must be >= 1");
    const double m = 2.0 * n;
    return bernoulli_number(2 * n + 2) / (m * (m + 1.0) * (m + 2.0));
}

double zeta_even(int two_m) {
    if (two_m < 2 || two_m % 2 != 0) throw RangeError("zeta_even: argument must be even and >= 2");
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    long double scale = 0.5L;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int j = 1; j <= two_m; ++j) scale *= two_pi / static_cast<long double>(j);
    return static_cast<double>(std::fabs(static_cast<long double>(bernoulli_number(two_m)) * scale));
}

double zeta_tail(int s, long k0) {
    if (s < 2) throw RangeError("zeta_tail: s must be >= 2");
    if (k0 < 0) k0 = 0;
    if (k0 == 0 && s % 2 == 0 && s <= BernoulliTable::instance().max_index()) return zeta_even(s);

    const long double ls = s;
    if (s > 12) {
        long double sum = 0.0L;
        for (long k = k0 + 1;; ++k) {
            const long double term = std::pow(static_cast<long double>(k), -ls);
            sum += term;
            if (term < 1e-20L * sum) break;
        }
        return static_cast<double>(sum);
    }

    // Direct part up to M-1, Euler-Maclaurin from M.
    const long m = k0 + 41;
    long double sum = 0.0L;
    for (long k = k0 + 1; k < m; ++k) sum += std::pow(static_cast<long double>(k), -ls);
    const long double lm = m;
    sum += std::pow(lm, 1.0L - ls) / (ls - 1.0L) + 0.5L * std::pow(lm, -ls);
    long double rising = ls;  // s (s+1) ... (s+2j-2)
    long double fact = 2.0L;  // (2j)!
    for (int j = 1; j <= 6; ++j) {
        sum += static_cast<long double>(bernoulli_number(2 * j)) / fact * rising *
               std::pow(lm, -ls - 2.0L * j + 1.0L);
        rising *= (ls + 2.0L * j - 1.0L) * (ls + 2.0L * j);
        fact *= (2.0L * j + 1.0L) * (2.0L * j + 2.0L);
    }
    return static_cast<double>(sum);
}

double bernoulli_poly_sup(int n) {
    if (n < 2) return 1.0;  // |B_0| = 1, |B_1(x)| <= 1/2
    // 2 n! zeta(n) / (2 pi)^n with zeta(n) <= 1 + 2^{-n} + 2^{1-n}/(n-1)
    long double v = 2.0L;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    for (int j = 1; j <= n; ++j) v *= static_cast<long double>(j) / two_pi;
    const long double zeta_bound =
        1.0L + std::pow(2.0L, -n) + std::pow(2.0L, 1 - n) / static_cast<long double>(n - 1);
    return static_cast<double>(v * zeta_bound);
}

double log_glaisher_from_zeta_derivative() {
    const GaussLegendre rule(32);
    auto integrand = [](double t) {
        if (t == 0.0) return 0.0;
        return t / std::expm1(t) * std::log(t);
    };
    double integral = integrate_graded_at_zero(rule, integrand, 1.0);
    for (int a = 1; a < 60; ++a) integral += rule.integrate(integrand, a, a + 1.0);

    const double gamma = kConstants.euler_gamma;
    const double pi = std::numbers::pi;
    const double zeta_prime_2 = integral - (1.0 - gamma) * pi * pi / 6.0;
    return (gamma + std::log(2.0 * pi)) / 12.0 - zeta_prime_2 / (2.0 * pi * pi);
}

}  // namespace barnes
