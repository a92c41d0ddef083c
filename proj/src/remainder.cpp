#include "barnes/remainder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

#include "barnes/asymptotic.hpp"
#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"
#include "barnes/quadrature.hpp"

namespace barnes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Rules {
    GaussLegendre fine;
    GaussLegendre coarse;
};

const Rules& rules_for(int order) {
    // Orders are few in practice; cache the last one per thread.
    thread_local int cached_order = 0;
    thread_local std::unique_ptr<Rules> cached;
    if (cached_order != order) {
        cached = std::make_unique<Rules>(Rules{GaussLegendre(order), GaussLegendre(order / 2)});
        cached_order = order;
    }
    return *cached;
}

Complex pow_int(Complex z, int n) {
    Complex result = 1.0;
    Complex base = z;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) result *= base;
        base *= base;
    }
    return result;
}

// sup_{r >= 0} |1 / (1 + r e^{-2 i theta})|
double rational_majorant(double theta) {
    const double a = std::fabs(theta);
    if (a <= kPi / 4) return 1.0;
    return std::fabs(1.0 / std::sin(2.0 * theta));
}

// int_T^inf t^k e^{-2 pi t} dt <= T^k e^{-2 pi T} / (2 pi - k/T),  T > k / (2 pi)
double exp_tail(int k, double T) {
    return std::pow(T, k) * std::exp(-2.0 * kPi * T) / (2.0 * kPi - k / T);
}

}  // namespace

void QuadraturePolicy::validate() const {
    if (nodes_per_interval < 16 || nodes_per_interval % 2 != 0) {
        throw DomainError("QuadraturePolicy: nodes_per_interval must be even and >= 16");
    }
    if (!(tail_tolerance > 0.0 && tail_tolerance <= 1e-12)) {
        throw DomainError("QuadraturePolicy: tail_tolerance must lie in (0, 1e-12]");
    }
    if (max_intervals < 64) throw DomainError("QuadraturePolicy: max_intervals must be >= 64");
}

const char* to_string(Representation r) {
    switch (r) {
        case Representation::Dilogarithm: return "dilogarithm";
        case Representation::PeriodicOdd: return "periodic_odd";
        case Representation::PeriodicEven: return "periodic_even";
    }
    return "unknown";
}

OracleValue remainder_narrow(Complex z, int n_trunc, const QuadraturePolicy& policy) {
    policy.validate();
    require_cut_plane(z, "remainder_narrow");
    if (n_trunc < 1) throw RangeError("remainder_narrow: n_trunc must be >= 1");
    const double theta = std::arg(z);
    if (!(std::fabs(theta) < kPi / 2)) throw DomainError("remainder_narrow: need |arg z| < pi/2");

    const double abs_z = std::abs(z);
    const int k = 2 * n_trunc - 1;
    const Complex prefactor =
        (n_trunc % 2 == 0 ? 1.0 : -1.0) / (2.0 * kPi * kPi) / pow_int(z, 2 * n_trunc);
    const double scale = std::abs(prefactor) * rational_majorant(theta) * kPi * kPi / 6.0;

    double T = std::max(4.0, k / (2.0 * kPi) + 1.0);
    while (scale * exp_tail(k, T) > policy.tail_tolerance) T += 0.5;
    const double tail = scale * exp_tail(k, T);

    const Complex inv_z = 1.0 / z;
    auto f = [&](double t) -> Complex {
        const Complex r = t * inv_z;
        return std::pow(t, k) * dilog(std::exp(-2.0 * kPi * t)) / (1.0 + r * r);
    };

    // Poles at t = +-iz sit |z| cos(theta) off the real line.
    const double h = std::min(0.5, std::max(abs_z * std::cos(theta), 1e-3));
    const long panel_count = static_cast<long>(std::ceil(T / h));
    if (panel_count > 64L * policy.max_intervals) {
        throw AccuracyError("remainder_narrow: too many panels near the pole", tail);
    }

    const Rules& rules = rules_for(policy.nodes_per_interval);
    Complex sum = 0.0;
    double quad_err = 0.0;
    // Li2(e^{-2 pi t}) has a t log t term at the origin.
    {
        const Complex fine = integrate_graded_at_zero(rules.fine, f, h, 40);
        const Complex coarse = integrate_graded_at_zero(rules.coarse, f, h, 40);
        sum += fine;
        quad_err += std::abs(fine - coarse);
    }
    for (long i = 1; i < panel_count; ++i) {
        const double a = i * h;
        const double b = std::min(T, (i + 1) * h);
        if (b <= a) break;
        const auto p = integrate_panel(rules.fine, rules.coarse, f, a, b);
        sum += p.value;
        quad_err += p.error;
    }

    OracleValue out;
    out.value = prefactor * sum;
    out.est_error = std::abs(prefactor) * quad_err + tail + kEps * std::abs(out.value);
    out.representation = Representation::Dilogarithm;
    out.n_eff = n_trunc;
    out.upper_limit = T;
    if (z.imag() == 0.0) out.value.imag(0.0);
    return out;
}

OracleValue remainder_wide(Complex z, int n_trunc, const QuadraturePolicy& policy,
                           Representation form) {
    policy.validate();
    require_cut_plane(z, "remainder_wide");
    if (n_trunc < 1) throw RangeError("remainder_wide: n_trunc must be >= 1");
    if (form == Representation::Dilogarithm) {
        throw DomainError("remainder_wide: needs a periodic-Bernoulli representation");
    }

    const double theta = std::arg(z);
    const double abs_z = std::abs(z);
    const double sec_half = 1.0 / std::cos(0.5 * theta);
    const bool odd = form == Representation::PeriodicOdd;
    const int max_ladder = 20;

    // Tail majorant beyond T for index M.
    auto tail_at = [&](int m, double T) {
        const double dm = 2.0 * m;
        if (odd) {
            return bernoulli_poly_sup(2 * m + 1) * std::pow(sec_half, dm) *
                   std::pow(T + abs_z, 1.0 - dm) / ((dm - 1.0) * dm * (dm + 1.0));
        }
        return 2.0 * std::fabs(bernoulli_number(2 * m + 2)) * std::pow(sec_half, dm + 1.0) *
               std::pow(T + abs_z, -dm) / (dm * (dm + 1.0) * (dm + 2.0));
    };

    int m = std::max(8, n_trunc);
    int intervals = 0;
    for (;; ++m) {
        intervals = 0;
        while (intervals <= policy.max_intervals &&
               tail_at(m, intervals) > policy.tail_tolerance) {
            ++intervals;
        }
        if (intervals <= policy.max_intervals) break;
        if (m >= std::max(max_ladder, n_trunc)) {
            throw AccuracyError("remainder_wide: tail bound not met within max_intervals",
                                tail_at(m, policy.max_intervals));
        }
    }
    const double tail = tail_at(m, intervals);

    const int power = odd ? 2 * m : 2 * m + 1;
    const int degree = odd ? 2 * m + 1 : 2 * m + 2;
    const double b_const = odd ? 0.0 : -bernoulli_number(2 * m + 2);
    const double dm = 2.0 * m;
    const double outer = odd ? -1.0 / (dm * (dm + 1.0)) : -1.0 / ((dm + 1.0) * (dm + 2.0));

    const Rules& rules = rules_for(policy.nodes_per_interval);
    Complex sum = 0.0;
    double quad_err = 0.0;
    for (int j = 0; j < intervals; ++j) {
        const double a = j;
        auto f = [&](double t) -> Complex {
            const double kernel = b_const + bernoulli_poly(degree, t - a);
            return kernel / pow_int(t + z, power);
        };
        // Split the unit interval when -z is close to it.
        const Complex c = -z;
        const double dx = std::max({a - c.real(), c.real() - (a + 1.0), 0.0});
        const double dist = std::hypot(dx, c.imag());
        const int pieces = std::clamp(static_cast<int>(std::ceil(2.0 / std::max(dist, 1e-6))), 1, 256);
        const double w = 1.0 / pieces;
        for (int s = 0; s < pieces; ++s) {
            const auto p = integrate_panel(rules.fine, rules.coarse, f, a + s * w, a + (s + 1) * w);
            sum += p.value;
            quad_err += p.error;
        }
    }

    Complex value = outer * sum;
    double est = std::fabs(outer) * quad_err + tail + kEps * std::abs(value);

    // Restore the skipped terms: R_N = sum_{n=N}^{M-1} c_n z^{-2n} + R_M.
    const Complex inv2 = 1.0 / (z * z);
    Complex power_n = pow_int(inv2, n_trunc);
    for (int n = n_trunc; n < m; ++n) {
        const Complex term = series_coefficient(n) * power_n;
        value += term;
        est += kEps * std::abs(term);
        power_n *= inv2;
    }

    if (est > 10.0 * policy.tail_tolerance + 1e-15 * std::abs(value)) {
        throw AccuracyError("remainder_wide: quadrature error estimate too large", est);
    }

    OracleValue out;
    out.value = value;
    if (z.imag() == 0.0) out.value.imag(0.0);
    out.est_error = est;
    out.representation = form;
    out.n_eff = m;
    out.upper_limit = intervals;
    return out;
}

OracleValue log_barnes_oracle(Complex z, const QuadraturePolicy& policy) {
    require_cut_plane(z, "log_barnes_oracle");
    OracleValue r = remainder_wide(z, 1, policy);
    const Complex head = truncated_log_barnes(z, 1);
    r.value += head;
    if (z.imag() == 0.0) r.value.imag(0.0);
    r.est_error += 4.0 * kEps * (std::abs(head) + 1.0);
    return r;
}

}  // namespace barnes
