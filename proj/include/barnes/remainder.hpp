#pragma once

#include "barnes/special_functions.hpp"

namespace barnes {

struct QuadraturePolicy {
    /// Gauss-Legendre order per panel; the error estimate uses half this order.
    int nodes_per_interval = 32;
    double tail_tolerance = 1e-13;
    int max_intervals = 64;

    /// Throws DomainError unless nodes_per_interval >= 16 (and even),
    /// tail_tolerance in (0, 1e-12], max_intervals >= 64.
    void validate() const;
};

/// Integral representation behind an oracle value.
enum class Representation {
    Dilogarithm,       // t^{2N-1} Li2(e^{-2 pi t}) / (1 + (t/z)^2) over [0, inf)
    PeriodicOdd,       // B_{2N+1}({t}) / (t+z)^{2N}
    PeriodicEven,      // (B_{2N+2}({t}) - B_{2N+2}) / (t+z)^{2N+1}
};

const char* to_string(Representation r);

struct OracleValue {
    Complex value;
    double est_error = 0.0;
    Representation representation = Representation::PeriodicOdd;
    /// Truncation index actually integrated (after laddering).
    int n_eff = 0;
    /// Upper integration limit used.
    double upper_limit = 0.0;
};

/// R_N(z) by the dilogarithm integral.  |arg z| < pi/2.
OracleValue remainder_narrow(Complex z, int n_trunc, const QuadraturePolicy& policy = {});

/// R_N(z) by a periodic-Bernoulli integral, |arg z| < pi.  N is raised to
/// N_eff >= 8 internally and the skipped series terms are added back.
OracleValue remainder_wide(Complex z, int n_trunc, const QuadraturePolicy& policy = {},
                           Representation form = Representation::PeriodicOdd);

/// log G(z+1) = truncated_log_barnes(z, 1) + R_1(z) with R_1 from remainder_wide.
OracleValue log_barnes_oracle(Complex z, const QuadraturePolicy& policy = {});

}  // namespace barnes
