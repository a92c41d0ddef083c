#include "barnes/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "barnes/bernoulli.hpp"
#include "barnes/errors.hpp"

namespace barnes {

namespace {

constexpr double kPi = std::numbers::pi;

void require_truncation(int n_trunc, const char* who) {
    if (n_trunc < 1 || n_trunc > kMaxTruncation) {
        throw RangeError(std::string(who) + ": n_trunc must lie in [1, " +
                         std::to_string(kMaxTruncation) + "]");
    }
}

// Sum_{n=1}^{N-1} coeff(n) z^{-2n}
template <class Coefficient>
Complex inverse_square_series(Complex z, int n_trunc, Coefficient coeff) {
    const Complex inv2 = 1.0 / (z * z);
    Complex power = inv2;
    Complex sum = 0.0;
    for (int n = 1; n < n_trunc; ++n) {
        sum += coeff(n) * power;
        power *= inv2;
    }
    return sum;
}

}  // namespace

std::string_view to_string(BoundSource source) {
    switch (source) {
        case BoundSource::Sector: return "sector";
        case BoundSource::SecantHalfAngle: return "secant_half_angle";
        case BoundSource::RotatedPath: return "rotated_path";
        case BoundSource::PositiveAxisSign: return "positive_axis_sign";
    }
    return "unknown";
}

void require_cut_plane(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(who) + ": non-finite argument");
    }
    if (z == Complex(0.0, 0.0)) throw DomainError(std::string(who) + ": z = 0");
    if (z.imag() == 0.0 && z.real() < 0.0) {
        throw DomainError(std::string(who) + ": z on the branch cut (arg z = pi)");
    }
}

Complex log_barnes_prefix(Complex z) {
    require_cut_plane(z, "log_barnes_prefix");
    const Complex log_z = std::log(z);
    return 0.25 * z * z + z * log_gamma(z + 1.0) - (0.5 * z * (z + 1.0) + 1.0 / 12.0) * log_z -
           kConstants.log_A;
}

Complex truncated_log_barnes(Complex z, int n_trunc) {
    require_cut_plane(z, "truncated_log_barnes");
    require_truncation(n_trunc, "truncated_log_barnes");
    return log_barnes_prefix(z) + inverse_square_series(z, n_trunc, series_coefficient);
}

Complex barnes_style_series(Complex z, int n_trunc) {
    require_cut_plane(z, "barnes_style_series");
    require_truncation(n_trunc, "barnes_style_series");
    const Complex log_z = std::log(z);
    const Complex head = -0.75 * z * z + 0.5 * z * std::log(2.0 * kPi) +
                         (0.5 * z * z - 1.0 / 12.0) * log_z + 1.0 / 12.0 - kConstants.log_A;
    return head + inverse_square_series(z, n_trunc, [](int n) {
               const double m = 2.0 * n;
               return bernoulli_number(2 * n + 2) / (m * (m + 2.0));
           });
}

double first_omitted_term(double abs_z, int n_trunc) {
    return std::fabs(series_coefficient(n_trunc)) * std::pow(abs_z, -2.0 * n_trunc);
}

double sector_factor(double theta) {
    const double a = std::fabs(theta);
    if (a > kPi / 2) throw DomainError("sector_factor: |theta| > pi/2");
    if (a <= kPi / 4) return 1.0;
    if (a == kPi / 2) return std::numeric_limits<double>::infinity();
    return std::fabs(1.0 / std::sin(2.0 * theta));
}

BoundReport bound_sector(Complex z, int n_trunc) {
    require_cut_plane(z, "bound_sector");
    const double theta = std::arg(z);
    if (std::fabs(theta) > kPi / 2) throw DomainError("bound_sector: |arg z| > pi/2");
    double factor = 1.0;
    if (std::fabs(theta) > kPi / 4) {
        const double cap = 0.5 * std::sqrt(std::numbers::e * (2.0 * n_trunc + 2.5));
        factor = std::min(sector_factor(theta), cap);
    }
    return {factor * first_omitted_term(std::abs(z), n_trunc), factor, std::nullopt,
            BoundSource::Sector};
}

BoundReport bound_secant_half_angle(Complex z, int n_trunc) {
    require_cut_plane(z, "bound_secant_half_angle");
    const double theta = std::arg(z);
    const double factor = std::pow(1.0 / std::cos(0.5 * theta), 2.0 * n_trunc + 1.0);
    return {factor * first_omitted_term(std::abs(z), n_trunc), factor, std::nullopt,
            BoundSource::SecantHalfAngle};
}

BoundReport bound_thm2(Complex z, int n_trunc) {
    require_cut_plane(z, "bound_thm2");
    if (n_trunc < 1) throw RangeError("bound_thm2: n_trunc must be >= 1");
    BoundReport secant = bound_secant_half_angle(z, n_trunc);
    if (std::fabs(std::arg(z)) > kPi / 2) return secant;
    BoundReport sector = bound_sector(z, n_trunc);
    return sector.bound <= secant.bound ? sector : secant;
}

double phi_star_residual(double phi, double theta, int n_trunc) {
    const double a = 2.0 * n_trunc + 3.0;
    const double b = 2.0 * n_trunc - 1.0;
    return a * std::cos(3.0 * phi - 2.0 * theta) - b * std::cos(phi - 2.0 * theta);
}

double solve_phi_star(double theta, int n_trunc) {
    if (n_trunc < 1) throw RangeError("solve_phi_star: n_trunc must be >= 1");
    const double t = std::fabs(theta);
    if (!(t > kPi / 4 && t < kPi)) throw DomainError("solve_phi_star: need pi/4 < |theta| < pi");
    if (theta < 0.0) return -solve_phi_star(t, n_trunc);

    double lo, hi;
    if (t >= 3.0 * kPi / 4) {
        lo = t - kPi / 2;
        hi = kPi / 2;
    } else if (t >= kPi / 2) {
        lo = t - kPi / 2;
        hi = t - kPi / 4;
    } else {
        lo = 0.0;
        hi = t - kPi / 4;
    }

    auto f = [&](double phi) { return phi_star_residual(phi, t, n_trunc); };
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw NumericalFailure("solve_phi_star: no sign change across the bracket");
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    double phi = 0.5 * (lo + hi);
    const double a = 2.0 * n_trunc + 3.0;
    const double b = 2.0 * n_trunc - 1.0;
    for (int step = 0; step < 2; ++step) {
        const double deriv = -3.0 * a * std::sin(3.0 * phi - 2.0 * t) + b * std::sin(phi - 2.0 * t);
        if (deriv == 0.0) break;
        const double next = phi - f(phi) / deriv;
        if (!(next >= lo - 1e-12 && next <= hi + 1e-12)) break;
        if (std::fabs(f(next)) > std::fabs(f(phi))) break;
        phi = next;
    }
    return phi;
}

BoundReport bound_thm3(Complex z, int n_trunc) {
    require_cut_plane(z, "bound_thm3");
    const double theta = std::arg(z);
    const double phi = solve_phi_star(theta, n_trunc);
    // Factor is even in theta: evaluate on the upper half-plane.
    const double t = std::fabs(theta);
    const double p = std::fabs(phi);
    const double factor =
        1.0 / (std::sin(2.0 * (t - p)) * std::pow(std::cos(p), 2.0 * n_trunc + 1.0));
    return {factor * first_omitted_term(std::abs(z), n_trunc), factor, phi,
            BoundSource::RotatedPath};
}

std::vector<BoundReport> applicable_bounds(Complex z, int n_trunc) {
    require_cut_plane(z, "applicable_bounds");
    if (n_trunc < 1) throw RangeError("applicable_bounds: n_trunc must be >= 1");
    std::vector<BoundReport> out;
    const double theta = std::arg(z);
    const double t = std::fabs(theta);
    if (z.imag() == 0.0 && z.real() > 0.0) {
        out.push_back({first_omitted_term(z.real(), n_trunc), 1.0, std::nullopt,
                       BoundSource::PositiveAxisSign});
    }
    if (t <= kPi / 2) out.push_back(bound_sector(z, n_trunc));
    out.push_back(bound_secant_half_angle(z, n_trunc));
    if (t > kPi / 4) out.push_back(bound_thm3(z, n_trunc));
    return out;
}

ExpansionResult certified_eval(Complex z, std::optional<int> n_trunc) {
    require_cut_plane(z, "certified_eval");
    auto best_at = [&](int n) {
        const auto bounds = applicable_bounds(z, n);
        // First minimum wins, so earlier (stronger-statement) sources take ties.
        return *std::min_element(bounds.begin(), bounds.end(),
                                 [](const BoundReport& a, const BoundReport& b) {
                                     return a.bound < b.bound;
                                 });
    };

    int n = 0;
    BoundReport best;
    if (n_trunc) {
        require_truncation(*n_trunc, "certified_eval");
        n = *n_trunc;
        best = best_at(n);
    } else {
        for (int candidate = 1; candidate <= kMaxTruncation; ++candidate) {
            const BoundReport r = best_at(candidate);
            if (n == 0 || r.bound < best.bound) {
                n = candidate;
                best = r;
            }
        }
    }

    ExpansionResult result;
    result.value = truncated_log_barnes(z, n);
    result.n_trunc = n;
    result.bound = best.bound;
    result.bound_source = best.theorem;
    result.report = best;
    result.weak = best.factor > kWeakFactor;
    result.sign_guaranteed = z.imag() == 0.0 && z.real() > 0.0;
    return result;
}

}  // namespace barnes
