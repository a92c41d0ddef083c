#include "barnes/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"

namespace barnes {

namespace {

constexpr double kPi = std::numbers::pi;

// Series is used where its cancellation factor e^{|w| + Re w} stays small.
template <class Real>
bool e1_use_series(const std::complex<Real>& w) {
    return std::abs(w) + w.real() <= Real(4);
}

// E_1(w) = -gamma - log w - sum_{k>=1} (-w)^k / (k k!), log w supplied by caller.
template <class Real>
std::complex<Real> e1_series(const std::complex<Real>& w, const std::complex<Real>& log_w) {
    const Real eps = std::numeric_limits<Real>::epsilon();
    std::complex<Real> term = -w;  // (-w)^k / k!
    std::complex<Real> sum = term;
    const Real mag = std::abs(w);
    for (int k = 2; k < 50000; ++k) {
        term *= -w / Real(k);
        const std::complex<Real> add = term / Real(k);
        sum += add;
        if (k > mag && std::abs(add) <= eps * std::abs(sum)) {
            return -Real(kConstants.euler_gamma) - log_w - sum;
        }
    }
    throw AccuracyError("exp_integral_e1: power series did not converge", std::abs(term));
}

// E_1(w) e^{w} = 1/(w+1- 1/(w+3- 4/(w+5- ...))), modified Lentz.
template <class Real>
std::complex<Real> e1_cf_scaled(const std::complex<Real>& w) {
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real tiny = std::numeric_limits<Real>::min() * Real(1e10);
    std::complex<Real> f = tiny;
    std::complex<Real> c = f;
    std::complex<Real> d = 0;
    for (int j = 1; j < 200000; ++j) {
        const std::complex<Real> a = (j == 1) ? Real(1) : -Real(j - 1) * Real(j - 1);
        const std::complex<Real> b = w + Real(2 * j - 1);
        d = b + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = Real(1) / d;
        const std::complex<Real> delta = c * d;
        f *= delta;
        if (std::abs(delta - Real(1)) <= eps) return f;
    }
    throw AccuracyError("exp_integral_e1: continued fraction did not converge", std::abs(f));
}

// delta - sin(delta) without cancellation near zero.
double delta_minus_sin(double delta) {
    if (std::fabs(delta) >= 0.5) return delta - std::sin(delta);
    const double d2 = delta * delta;
    double term = delta * d2 / 6.0;
    double sum = term;
    for (int k = 2; k < 30; ++k) {
        term *= -d2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

}  // namespace

void LogGammaPolicy::validate() const {
    if (!(shift_threshold >= 8.0)) throw DomainError("LogGammaPolicy: shift_threshold must be >= 8");
    if (stirling_terms < 4 || stirling_terms > 20) {
        throw DomainError("LogGammaPolicy: stirling_terms must lie in [4, 20]");
    }
}

Complex log_gamma(Complex z, const LogGammaPolicy& policy) {
    policy.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("log_gamma: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0) {
        if (z.real() == std::floor(z.real())) throw DomainError("log_gamma: pole at a non-positive integer");
        throw DomainError("log_gamma: argument on the negative real axis");
    }
    // libm is accurate near the zeros at 1 and 2, where the shifted sum is not
    if (z.imag() == 0.0) return std::lgamma(z.real());

    Complex shift_sum = 0.0;
    Complex w = z;
    while (std::abs(w) < policy.shift_threshold || w.real() < 0.0) {
        shift_sum += std::log(w);
        w += 1.0;
    }

    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;  // w^{-(2n-1)}
    for (int n = 1; n <= policy.stirling_terms; ++n) {
        series += bernoulli_number(2 * n) / (2.0 * n * (2.0 * n - 1.0)) * power;
        power *= inv2;
    }
    const Complex stirling = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series;
    return stirling - shift_sum;
}

double dilog(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("dilog: argument outside [0, 1]");
    if (x == 1.0) return kPi * kPi / 6.0;
    auto series = [](double y) {
        double power = y;
        double sum = 0.0;
        for (int n = 1; n < 2000; ++n) {
            const double term = power / (static_cast<double>(n) * n);
            sum += term;
            if (term <= 1e-17 * sum) break;
            power *= y;
        }
        return sum;
    };
    if (x <= 0.5) return series(x);
    const double y = 1.0 - x;  // exact for x in (0.5, 1]
    return kPi * kPi / 6.0 - std::log(x) * std::log(y) - series(y);
}

Complex exp_integral_e1(Complex w) {
    if (w == Complex(0.0, 0.0)) throw DomainError("exp_integral_e1: logarithmic singularity at w = 0");
    if (w.imag() == 0.0 && w.real() < 0.0) throw DomainError("exp_integral_e1: argument on the branch cut");
    const detail::ComplexLD lw(w.real(), w.imag());
    if (e1_use_series(lw)) {
        const auto v = e1_series(lw, std::log(lw));
        return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    const auto v = e1_cf_scaled(lw) * std::exp(-lw);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex erf_small(Complex zeta) {
    if (std::abs(zeta) > 4.0) throw RangeError("erf_small: |zeta| > 4");
    using LD = long double;
    const detail::ComplexLD z(zeta.real(), zeta.imag());
    const detail::ComplexLD z2 = z * z;
    const LD two_over_sqrt_pi = 2.0L / std::sqrt(std::numbers::pi_v<LD>);
    const LD eps = 1e-19L;
    if (z2.real() >= 0.0L) {
        // erf z = 2/sqrt(pi) e^{-z^2} sum 2^n z^{2n+1} / (2n+1)!!
        detail::ComplexLD term = z;
        detail::ComplexLD sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= 2.0L * z2 / static_cast<LD>(2 * n + 1);
            sum += term;
            if (std::abs(term) <= eps * std::abs(sum)) break;
        }
        const auto v = two_over_sqrt_pi * std::exp(-z2) * sum;
        return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
    // erf z = 2/sqrt(pi) sum (-1)^n z^{2n+1} / (n! (2n+1))
    detail::ComplexLD power = z;
    detail::ComplexLD sum = z;
    for (int n = 1; n < 500; ++n) {
        power *= -z2 / static_cast<LD>(n);
        const detail::ComplexLD add = power / static_cast<LD>(2 * n + 1);
        sum += add;
        if (n > std::abs(z2) && std::abs(add) <= eps * std::abs(sum)) break;
    }
    const auto v = two_over_sqrt_pi * sum;
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex c_of_phi(double phi) {
    const double delta = phi - kPi;
    if (!(std::fabs(delta) < 2.0 * kPi)) throw DomainError("c_of_phi: |phi - pi| must be < 2 pi");
    if (delta == 0.0) return 0.0;
    const double s = std::sin(0.5 * delta);
    // 2 (1 + i delta - e^{i delta}) = 4 sin^2(delta/2) + 2 i (delta - sin delta)
    const Complex g(4.0 * s * s, 2.0 * delta_minus_sin(delta));
    // g stays in the open upper (delta > 0) or lower (delta < 0) half-plane, so
    // the principal root is continuous on each side; the sign matches delta.
    const Complex root = std::sqrt(g);
    return delta > 0.0 ? root : -root;
}

namespace detail {

ComplexLD e1_scaled(long double modulus, long double arg) {
    if (!(modulus > 0.0L)) throw DomainError("e1_scaled: w = 0");
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    const long double pi = std::numbers::pi_v<long double>;
    // sheet index m with arg - 2 pi m in (-pi, pi]
    long double m = std::ceil((arg - pi) / two_pi);
    const long double principal_arg = arg - two_pi * m;
    const ComplexLD w = std::polar(modulus, principal_arg);
    if (e1_use_series(w)) {
        // log taken on the requested sheet carries the continuation
        const ComplexLD log_w(std::log(modulus), arg);
        return e1_series(w, log_w) * std::exp(w);
    }
    ComplexLD v = e1_cf_scaled(w);
    if (m != 0.0L) v -= ComplexLD(0.0L, two_pi * m) * std::exp(w);
    return v;
}

}  // namespace detail

}  // namespace barnes
