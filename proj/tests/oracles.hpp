#pragma once

// Reference values computed without the library's own algorithms.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using CLD = std::complex<long double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = 0.57721566490153286061;
// 1/12 - zeta'(-1)
inline constexpr double log_glaisher = 0.24875447703378426184;
inline constexpr double zeta_prime_2 = -0.93754825431584375370;

// B_{2n} = (-1)^{n-1} 2n T_n / (4^n (4^n - 1)) with the tangent numbers T_n
// from the Knuth-Buckholtz integer recurrence (exact in 128 bits for n <= 16).
// Returns B_0 .. B_{2 n_max}, B_1 = -1/2.
inline std::vector<long double> bernoulli_from_tangent_numbers(int n_max) {
    std::vector<__int128> t(n_max + 1, 0);
    if (n_max >= 1) t[1] = 1;
    for (int k = 2; k <= n_max; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n_max; ++k) {
        for (int j = k; j <= n_max; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    std::vector<long double> b(2 * n_max + 1, 0.0L);
    b[0] = 1.0L;
    if (n_max >= 1) b[1] = -0.5L;
    for (int n = 1; n <= n_max; ++n) {
        const long double four_n = std::ldexp(1.0L, 2 * n);
        const long double sign = (n % 2) ? 1.0L : -1.0L;
        b[2 * n] = sign * 2.0L * n * static_cast<long double>(t[n]) / (four_n * (four_n - 1.0L));
    }
    return b;
}

inline double b2(double x) { return x * x - x + 1.0 / 6.0; }
inline double b3(double x) { return x * x * x - 1.5 * x * x + 0.5 * x; }
inline double b4(double x) { return x * x * x * x - 2 * x * x * x + x * x - 1.0 / 30.0; }

// composite Simpson on [a, b] with n (even) subintervals
template <class F>
auto simpson(F f, long double a, long double b, int n) {
    const long double h = (b - a) / n;
    auto sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
    return sum * (h / 3.0L);
}

// erf along the straight path: 2 zeta / sqrt(pi) int_0^1 e^{-zeta^2 u^2} du
inline Complex erf_path(Complex zeta) {
    const CLD z(zeta.real(), zeta.imag());
    auto f = [&](long double u) { return std::exp(-z * z * (u * u)); };
    const CLD v = simpson(f, 0.0L, 1.0L, 20000) * z * (2.0L / std::sqrt(std::numbers::pi_v<long double>));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// E1(w) = e^{-w} int_0^inf e^{-s} / (s + w) ds, w off the negative axis and
// not too close to it.
inline Complex e1_integral(Complex w) {
    const CLD wl(w.real(), w.imag());
    auto f = [&](long double s) { return CLD(std::exp(-s)) / (s + wl); };
    CLD total = 0.0L;
    // finer near the origin where 1/(s+w) varies fastest
    total += simpson(f, 0.0L, 1.0L, 20000);
    total += simpson(f, 1.0L, 10.0L, 20000);
    total += simpson(f, 10.0L, 60.0L, 4000);
    const CLD v = std::exp(-wl) * total;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// E1(1) = -gamma - sum_{k>=1} (-1)^k / (k k!)
inline double e1_at_one() {
    long double sum = 0.0L, fact = 1.0L;
    for (int k = 1; k < 40; ++k) {
        fact *= k;
        sum += ((k % 2) ? -1.0L : 1.0L) / (k * fact);
    }
    return static_cast<double>(-0.57721566490153286061L - sum);
}

// Li2(x) = sum x^k / k^2, x <= 0.95
inline double dilog_series(double x) {
    long double sum = 0.0L, p = 1.0L;
    for (int k = 1; k < 2000; ++k) {
        p *= x;
        sum += p / (static_cast<long double>(k) * k);
        if (p < 1e-22L) break;
    }
    return static_cast<double>(sum);
}

// log G(n) = sum_{k=1}^{n-1} log Gamma(k) for integer n >= 1
inline double log_barnes_g_integer(int n) {
    double s = 0.0;
    for (int k = 1; k < n; ++k) s += std::lgamma(static_cast<double>(k));
    return s;
}

// G(z+1) from mpmath.barnesg (30 digits), for comparison through exp().
struct BarnesReference {
    Complex z;
    Complex g_of_z_plus_1;
};
inline const std::vector<BarnesReference>& barnes_references() {
    static const std::vector<BarnesReference> refs = {
        {{4.0, 3.0}, {0.019007568204352578281, -0.00027233721946170563621}},
        {{-2.0, 1.5}, {51.771627997165035851, -124.42001581528165818}},
        {{0.5, -7.0}, {-9.8903088334386610222e-8, -4.1639775224085970269e-8}},
        {{2.5, 0.0}, {1.2596482574951921441, 0.0}},
    };
    return refs;
}

// principal log Gamma from mpmath.loggamma
struct LogGammaReference {
    Complex z;
    Complex value;
};
inline const std::vector<LogGammaReference>& log_gamma_references() {
    static const std::vector<LogGammaReference> refs = {
        {{3.0, 4.0}, {-1.7566267846037841105, 4.7426644380346579282}},
        {{-5.5, 0.3}, {-4.9010400841222228388, -18.311558468364361591}},
        {{0.1, 20.0}, {-31.695265907346562615, 39.284410010649361162}},
    };
    return refs;
}

// mpmath.e1
inline constexpr Complex e1_2_3{-0.024826207944199362925, 0.020316674911044622667};
inline constexpr Complex e1_m4_05{-18.36999175963348643, 3.507105957846210991};

}  // namespace oracle
