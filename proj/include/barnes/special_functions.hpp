#pragma once

#include <complex>

namespace barnes {

using Complex = std::complex<double>;

/// Evaluation strategy for log Gamma: shift upward by the recurrence until
/// |z| >= shift_threshold and Re z >= 0, then apply `stirling_terms` terms of
/// the Stirling series.
struct LogGammaPolicy {
    double shift_threshold = 12.0;
    int stirling_terms = 12;

    /// Throws DomainError unless shift_threshold >= 8 and 4 <= stirling_terms <= 20.
    void validate() const;
};

/// Principal branch of log Gamma(z) (the continuation from the positive real
/// axis into the plane cut along (-inf, 0]).  Positive reals go to std::lgamma.
Complex log_gamma(Complex z, const LogGammaPolicy& policy = {});

/// Li_2(x) for 0 <= x <= 1.
double dilog(double x);

/// E_1(w) = Gamma(0, w), principal branch; w off the closed negative real axis.
Complex exp_integral_e1(Complex w);

/// erf for |zeta| <= 4 by Maclaurin-type series.
Complex erf_small(Complex zeta);

/// Branch of c(phi), 1/2 c^2 = 1 + i(phi - pi) - e^{i(phi - pi)}, with
/// c(phi) ~ (phi - pi) + (i/6)(phi - pi)^2 near phi = pi.  Accepts
/// |phi - pi| < 2 pi, which covers every argument the erf form of the
/// terminant asymptotics needs.
Complex c_of_phi(double phi);

namespace detail {

using ComplexLD = std::complex<long double>;

/// E_1(w) e^{w} in extended precision for w = modulus * e^{i arg}, with `arg`
/// any real number: values off the principal sheet follow the analytic
/// continuation E_1(w e^{2 pi i m}) = E_1(w) - 2 pi i m.
ComplexLD e1_scaled(long double modulus, long double arg);

}  // namespace detail

}  // namespace barnes
