#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace barnes {

/// Bernoulli numbers B_0 .. B_max_index (B_1 = -1/2), built once.  They
/// satisfy sum_{k=0}^{n} C(n+1,k) B_k = 0.
class BernoulliTable {
public:
    static constexpr int kDefaultMaxIndex = 64;

    explicit BernoulliTable(int max_index = kDefaultMaxIndex);

    /// Process-wide table of the default size.
    static const BernoulliTable& instance();

    int max_index() const noexcept { return max_index_; }
    std::span<const double> values() const noexcept { return values_; }

    /// B_n; throws RangeError for n > max_index().
    double operator()(int n) const;

    /// B_n in long double, for sums with cancellation.
    long double extended(int n) const;

private:
    int max_index_;
    std::vector<double> values_;
    std::vector<long double> extended_;
};

struct Constants {
    double log_A;        // Glaisher-Kinkelin, log A
    double euler_gamma;
};

/// Stored constants.
constexpr Constants kConstants{0.2487544770337843, 0.5772156649015329};

double bernoulli_number(int n);

/// B_n(x) for 0 <= x <= 1 by the binomial expansion over the table.
double bernoulli_poly(int n, double x);

/// Coefficient of z^{-2n} in the asymptotic series of log G(z+1):
/// B_{2n+2} / (2n (2n+1) (2n+2)).
double series_coefficient(int n);

/// Riemann zeta at an even positive integer from the Bernoulli table.
double zeta_even(int two_m);

/// sum_{k > k0} k^{-s} for integer s >= 2 (Euler-Maclaurin tail).
double zeta_tail(int s, long k0);

/// Upper bound on max_{x in [0,1]} |B_n(x)| from the Fourier series,
/// 2 n! zeta(n) / (2 pi)^n, n >= 2.
double bernoulli_poly_sup(int n);

/// log A recomputed as (gamma + log 2pi)/12 - zeta'(2)/(2 pi^2), with zeta'(2)
/// obtained by quadrature of  int_0^inf t log t/(e^t - 1) dt - (1-gamma) zeta(2).
double log_glaisher_from_zeta_derivative();

}  // namespace barnes
