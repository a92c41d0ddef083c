#include "barnes/hyperasymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "barnes/asymptotic.hpp"
#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"
#include "barnes/quadrature.hpp"

namespace barnes {

namespace {

using detail::ComplexLD;

constexpr double kPi = std::numbers::pi;
constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsL = std::numeric_limits<long double>::epsilon();

void require_order(int p, const char* who) {
    if (p < 1) throw DomainError(std::string(who) + ": p must be a positive integer");
}

void require_modulus(double r, const char* who) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError(std::string(who) + ": |w| must be positive and finite");
    }
}

Complex to_double(ComplexLD v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// e^{-w} for w = r e^{i a}
ComplexLD exp_minus(long double r, long double a) {
    const long double mag = std::exp(-r * std::cos(a));
    const long double ang = -r * std::sin(a);
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

// T_p(w) e^{w} and its error, in extended precision.
struct ScaledValue {
    ComplexLD value;
    long double error;
};

ScaledValue recurrence_scaled(int p, long double r, long double a) {
    // -(1/(2 pi i)) [E1(w) e^w + sum_{m=1}^{p-1} (-1)^m (m-1)! / w^m]
    const ComplexLD seed = detail::e1_scaled(r, a);
    const ComplexLD inv_w = std::polar(1.0L / r, -a);
    ComplexLD sum = seed;
    long double magnitude = std::abs(seed);
    ComplexLD term = -inv_w;
    for (int m = 1; m < p; ++m) {
        sum += term;
        magnitude += std::abs(term);
        term *= -static_cast<long double>(m) * inv_w;
    }
    const ComplexLD scale(0.0L, 1.0L / (2.0L * kPiL));
    const ComplexLD value = scale * sum;
    // Seed good to a few ulps; each addition loses at most an ulp of the
    // running magnitude.
    const long double error = (8.0L + p) * kEpsL * magnitude / (2.0L * kPiL);
    return {value, error};
}

// Gamma(1-p, w) e^{w} w^{p-1} on the principal sheet by the Legendre
// continued fraction 1/(w+p - 1*p/(w+p+2 - 2(p+1)/(w+p+4 - ...))).
// Empty when it does not settle.
std::optional<ComplexLD> upper_gamma_cf(int p, ComplexLD w) {
    constexpr long double tiny = 1e-300L;
    ComplexLD f = tiny;
    ComplexLD c = f;
    ComplexLD d = 0.0L;
    for (int j = 0; j < 4000; ++j) {
        const ComplexLD b = w + static_cast<long double>(p + 2 * j);
        const long double a = j == 0 ? 1.0L : -static_cast<long double>(j) * (j - 1 + p);
        d = b + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0L / d;
        const ComplexLD delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0L) < 4.0L * kEpsL) return f;
    }
    return std::nullopt;
}

ScaledValue terminant_scaled_ld(int p, long double r, long double a) {
    ScaledValue rec = recurrence_scaled(p, r, a);
    if (rec.error <= 1e3L * kEpsL * std::abs(rec.value)) return rec;

    // Cancellation: take the principal-sheet value from the continued
    // fraction and step sheets with E1(w e^{2 pi i m}) = E1(w) - 2 pi i m.
    const long double m = std::ceil((a - kPiL) / (2.0L * kPiL));
    const long double a0 = a - 2.0L * kPiL * m;
    if (std::fabs(a0) > 0.95L * kPiL) return rec;
    const ComplexLD w = std::polar(r, a0);
    const auto cf = upper_gamma_cf(p, w);
    if (!cf) return rec;
    long double fact = 1.0L;
    for (int j = 2; j < p; ++j) fact *= j;
    const long double sign = (p % 2 == 0) ? 1.0L : -1.0L;
    const ComplexLD w_pow = std::polar(std::pow(r, static_cast<long double>(1 - p)),
                                       static_cast<long double>(1 - p) * a0);
    ComplexLD value = sign * fact * w_pow * (*cf) / ComplexLD(0.0L, 2.0L * kPiL);
    long double error = 64.0L * kEpsL * std::abs(value);
    if (m != 0.0L) {
        const ComplexLD exp_w = 1.0L / exp_minus(r, a);
        value += m * exp_w;
        error += 4.0L * kEpsL * std::fabs(m) * std::abs(exp_w);
    }
    if (error >= rec.error) return rec;
    return {value, error};
}

}  // namespace

const char* to_string(TerminantMethod m) {
    switch (m) {
        case TerminantMethod::GammaRecurrence: return "gamma_recurrence";
        case TerminantMethod::DirectQuadrature: return "direct_quadrature";
        case TerminantMethod::ErfAsymptotic: return "erf_asymptotic";
    }
    return "unknown";
}

TerminantEval terminant_scaled(int p, PolarPoint w) {
    require_order(p, "terminant_scaled");
    require_modulus(w.modulus, "terminant_scaled");
    if (!std::isfinite(w.arg)) throw DomainError("terminant_scaled: non-finite arg");
    const ScaledValue s = terminant_scaled_ld(p, w.modulus, w.arg);
    return {to_double(s.value), TerminantMethod::GammaRecurrence,
            static_cast<double>(s.error) + kEps * static_cast<double>(std::abs(s.value))};
}

TerminantEval terminant_recurrence(int p, PolarPoint w) {
    require_order(p, "terminant");
    require_modulus(w.modulus, "terminant");
    if (!std::isfinite(w.arg)) throw DomainError("terminant: non-finite arg");
    const ScaledValue s = terminant_scaled_ld(p, w.modulus, w.arg);
    const ComplexLD factor = exp_minus(w.modulus, w.arg);
    const ComplexLD value = s.value * factor;
    const double err = static_cast<double>(s.error * std::abs(factor));
    return {to_double(value), TerminantMethod::GammaRecurrence,
            err + kEps * static_cast<double>(std::abs(value))};
}

TerminantEval terminant_erf_approx(int p, PolarPoint w) {
    require_order(p, "terminant_erf_approx");
    require_modulus(w.modulus, "terminant_erf_approx");
    const double r = w.modulus;
    const double phi = w.arg;
    if (std::fabs(p - r) > 0.2 * r) {
        throw DomainError("terminant_erf_approx: p must lie within 20% of |w|");
    }
    if (!(phi >= -3.0 * kPi + 0.1 && phi <= 3.0 * kPi - 0.1)) {
        throw DomainError("terminant_erf_approx: arg w outside [-3pi + 0.1, 3pi - 0.1]");
    }
    const double root = std::sqrt(0.5 * r);
    const Complex zeta = phi >= 0.0 ? c_of_phi(phi) * root : -std::conj(c_of_phi(-phi)) * root;
    Complex erf_value;
    if (std::abs(zeta) > 4.0) {
        erf_value = zeta.real() >= 0.0 ? 1.0 : -1.0;
    } else {
        erf_value = erf_small(zeta);
    }
    // e^{2 pi i p} = 1 for integer p in the mirrored form.
    const Complex value = phi >= 0.0 ? 0.5 + 0.5 * erf_value : -0.5 + 0.5 * erf_value;
    return {value, TerminantMethod::ErfAsymptotic, 1.0 / std::sqrt(r)};
}

TerminantEval terminant_erf_approx(int p, Complex w) {
    if (w == Complex(0.0, 0.0)) throw DomainError("terminant_erf_approx: w = 0");
    return terminant_erf_approx(p, PolarPoint{std::abs(w), std::arg(w)});
}

TerminantEval terminant(int p, PolarPoint w) {
    TerminantEval rec = terminant_recurrence(p, w);
    const double r = w.modulus;
    const bool lost = !(rec.est_error <= 1e-3 * std::abs(rec.value));
    if (lost && r >= 50.0 && std::fabs(p - r) <= 0.2 * r && w.arg >= -3.0 * kPi + 0.1 &&
        w.arg <= 3.0 * kPi - 0.1) {
        return terminant_erf_approx(p, w);
    }
    return rec;
}

TerminantEval terminant(int p, Complex w) {
    if (w == Complex(0.0, 0.0)) throw DomainError("terminant: w = 0");
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw DomainError("terminant: non-finite w");
    }
    double a = std::arg(w);
    if (a == -kPi / 2) throw DomainError("terminant: arg w = -pi/2 is outside (-pi/2, 3pi/2)");
    if (a < -kPi / 2) a += 2.0 * kPi;
    return terminant(p, PolarPoint{std::abs(w), a});
}

TerminantEval terminant_direct(int p, Complex w) {
    require_order(p, "terminant_direct");
    if (w == Complex(0.0, 0.0)) throw DomainError("terminant_direct: w = 0");
    if (w.imag() == 0.0 && w.real() < 0.0) {
        throw DomainError("terminant_direct: needs |arg w| < pi");
    }

    static const GaussLegendre fine(32);
    static const GaussLegendre coarse(16);
    const int k = p - 1;
    auto g = [&](double t) -> Complex {
        const double weight = k == 0 ? std::exp(-t) : (t > 0.0 ? std::exp(k * std::log(t) - t) : 0.0);
        return weight / (w + t);
    };

    // Panels no wider than half the distance to the pole at t = -w.
    Complex sum = 0.0;
    double quad_err = 0.0;
    double t = 0.0;
    const double peak = std::max(0, k);
    const double t_cap = peak + 400.0;
    for (;;) {
        const double d = std::abs(w + t);
        const double h = std::clamp(0.5 * d, 1e-3, 1.0);
        const auto panel = integrate_panel(fine, coarse, g, t, t + h);
        sum += panel.value;
        quad_err += panel.error;
        t += h;
        if (t > peak + 20.0 && std::abs(panel.value) <= 1e-18 * std::abs(sum)) break;
        if (t > t_cap) throw AccuracyError("terminant_direct: integral did not settle", quad_err);
    }
    // Remaining tail: t^k e^{-t} decays faster than geometrically here.
    const double tail = std::exp(k * std::log(t) - t) / std::max(std::abs(w + t), 1e-300);

    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    const Complex prefactor =
        sign * std::exp(static_cast<double>(1 - p) * std::log(w) - w) / Complex(0.0, 2.0 * kPi);
    const Complex value = prefactor * sum;
    const double est = std::abs(prefactor) * (quad_err + tail) + 4.0 * p * kEps * std::abs(value);
    return {value, TerminantMethod::DirectQuadrature, est};
}

TruncationScheme TruncationScheme::optimal(int k_max) {
    TruncationScheme s;
    s.mode = TruncationMode::Optimal;
    s.k_max = k_max;
    return s;
}

TruncationScheme TruncationScheme::uniform(int n, int k_max) {
    TruncationScheme s;
    s.mode = TruncationMode::Uniform;
    s.uniform_n = n;
    s.k_max = k_max;
    return s;
}

void TruncationScheme::validate() const {
    if (k_max < 1) throw DomainError("TruncationScheme: k_max must be >= 1");
    if (mode == TruncationMode::Uniform) {
        if (!uniform_n) throw DomainError("TruncationScheme: Uniform mode needs uniform_n");
        if (*uniform_n < 0 || *uniform_n > kUniformCap) {
            throw DomainError("TruncationScheme: uniform_n must lie in [0, " +
                              std::to_string(kUniformCap) + "]");
        }
    }
}

int TruncationScheme::n_for(int k, double abs_z) const {
    if (mode == TruncationMode::Uniform) return *uniform_n;
    const double n = std::round(kPi * k * abs_z);
    return static_cast<int>(std::min<double>(n, kOptimalCap));
}

namespace {

ImprovedExpansion improved_upper(Complex z, const TruncationScheme& scheme) {
    const double r = std::abs(z);
    const double theta = std::arg(z);

    // Polynomial part: sum_k sum_{n < N_k} a_n k^{-2n-4}, with
    // a_n = -(-1)^n 2 (2n+1)! / ((2 pi)^{2n+4} z^{2n+2}).
    const int cap = scheme.mode == TruncationMode::Uniform ? *scheme.uniform_n
                                                           : TruncationScheme::kOptimalCap;
    std::vector<std::complex<long double>> a(static_cast<std::size_t>(std::max(cap, 0)));
    {
        const std::complex<long double> zl(z.real(), z.imag());
        const std::complex<long double> z2 = zl * zl;
        const long double two_pi_sq = 4.0L * kPiL * kPiL;
        std::complex<long double> an = -2.0L / (two_pi_sq * two_pi_sq * z2);
        for (int n = 0; n < cap; ++n) {
            a[n] = an;
            an *= -static_cast<long double>((2 * n + 2) * (2 * n + 3)) / (two_pi_sq * z2);
        }
    }
    // First k from which N_k stays at the cap.
    long k_star = 1;
    while (scheme.n_for(static_cast<int>(k_star), r) < cap) ++k_star;

    std::complex<long double> poly = 0.0L;
    for (long k = 1; k < k_star; ++k) {
        const int nk = scheme.n_for(static_cast<int>(k), r);
        const long double kk = static_cast<long double>(k);
        for (int n = 0; n < nk; ++n) poly += a[n] * std::pow(kk, -(2.0L * n + 4.0L));
    }
    for (int n = 0; n < cap; ++n) {
        poly += a[n] * static_cast<long double>(zeta_tail(2 * n + 4, k_star - 1));
    }

    Complex value = log_barnes_prefix(z) + Complex(static_cast<double>(poly.real()),
                                                   static_cast<double>(poly.imag()));

    ImprovedExpansion out;
    Complex last_term = 0.0;
    for (int k = 1; k <= scheme.k_max; ++k) {
        const int p = 2 * scheme.n_for(k, r) + 1;
        const double R = 2.0 * kPi * k * r;
        const TerminantEval up = terminant_scaled(p, PolarPoint{R, theta + kPi / 2});
        const TerminantEval down = terminant_scaled(p, PolarPoint{R, theta - kPi / 2});
        const Complex denom(0.0, 2.0 * kPi * k * k);
        const Complex term = (up.value + down.value) / denom;
        value -= term;
        out.terminant_error += (up.est_error + down.est_error) / std::abs(denom);
        last_term = term;
    }
    out.value = value;
    out.k_tail_estimate = std::abs(last_term) * scheme.k_max;
    return out;
}

}  // namespace

ImprovedExpansion exp_improved_log_barnes(Complex z, const TruncationScheme& scheme) {
    scheme.validate();
    require_cut_plane(z, "exp_improved_log_barnes");
    if (z.imag() < 0.0) {
        ImprovedExpansion mirrored = improved_upper(std::conj(z), scheme);
        mirrored.value = std::conj(mirrored.value);
        return mirrored;
    }
    ImprovedExpansion out = improved_upper(z, scheme);
    if (z.imag() == 0.0) out.value.imag(0.0);
    return out;
}

std::vector<StokesSample> stokes_profile(double abs_z, int k, std::span<const double> thetas) {
    if (!(abs_z >= 1.5) || !std::isfinite(abs_z)) throw DomainError("stokes_profile: need |z| >= 1.5");
    if (k < 1) throw DomainError("stokes_profile: k must be >= 1");
    const TruncationScheme scheme = TruncationScheme::optimal(k);
    const int n_k = scheme.n_for(k, abs_z);
    const int p = 2 * n_k + 1;
    const double R = 2.0 * kPi * k * abs_z;
    const double rate = std::sqrt(kPi * k * abs_z);
    const Complex limit = 1.0 / Complex(0.0, 2.0 * kPi * k * k);
    // Closed window; endpoints of a linspace may round just past 0.5.
    const double kWindow = 0.5 + 1e-12;

    std::vector<StokesSample> out;
    out.reserve(thetas.size());
    for (const double theta : thetas) {
        StokesSample s;
        s.theta = theta;
        s.k = k;
        s.n_k = n_k;
        if (std::fabs(theta - kPi / 2) <= kWindow) {
            const TerminantEval t = terminant(p, PolarPoint{R, theta + kPi / 2});
            s.multiplier = -t.value * limit;
            s.normalized = t.value;
            s.erf_prediction = 0.5 + 0.5 * std::erf((theta - kPi / 2) * rate);
        } else if (std::fabs(theta + kPi / 2) <= kWindow) {
            const TerminantEval t = terminant(p, PolarPoint{R, theta - kPi / 2});
            s.multiplier = -t.value * limit;
            s.normalized = -t.value;
            s.erf_prediction = 0.5 - 0.5 * std::erf((theta + kPi / 2) * rate);
        } else {
            throw DomainError("stokes_profile: theta must lie within 0.5 of +-pi/2");
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace barnes
