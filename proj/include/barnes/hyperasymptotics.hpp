#pragma once

#include <optional>
#include <span>
#include <vector>

#include "barnes/special_functions.hpp"

namespace barnes {

enum class TerminantMethod { GammaRecurrence, DirectQuadrature, ErfAsymptotic };

const char* to_string(TerminantMethod m);

struct TerminantEval {
    Complex value;
    TerminantMethod method = TerminantMethod::GammaRecurrence;
    double est_error = 0.0;
};

/// w = modulus * e^{i arg} with the argument kept explicitly, so that points
/// on or across a cut are unambiguous.
struct PolarPoint {
    double modulus = 0.0;
    double arg = 0.0;
};

/// T_p(w) = e^{pi i p} Gamma(p) / (2 pi i) Gamma(1-p, w), p >= 1.
/// Complex input: arg w is taken in (-pi/2, 3pi/2).  Polar input: any arg,
/// by analytic continuation.  Uses the incomplete-gamma recurrence, falling
/// back on the erf form only when p ~ |w| >= 50 and the recurrence has lost
/// most of its digits.
TerminantEval terminant(int p, Complex w);
TerminantEval terminant(int p, PolarPoint w);

/// T_p(w) e^{w}.  Stays O(1)-sized where T_p itself over- or underflows.
TerminantEval terminant_scaled(int p, PolarPoint w);

/// Recurrence path only (no fallback).
TerminantEval terminant_recurrence(int p, PolarPoint w);

/// e^{pi i p} w^{1-p} e^{-w} / (2 pi i) int_0^inf t^{p-1} e^{-t} / (w + t) dt,
/// |arg w| < pi.
TerminantEval terminant_direct(int p, Complex w);

/// 1/2 + 1/2 erf(c(phi) sqrt(|w|/2)) for phi >= 0, and the mirrored form
/// e^{2 pi i p}(-1/2 + 1/2 erf(-conj c(-phi) sqrt(|w|/2))) for phi < 0.
/// Needs |p - |w|| <= 0.2 |w| and -3pi + 0.1 <= phi <= 3pi - 0.1.
TerminantEval terminant_erf_approx(int p, PolarPoint w);
TerminantEval terminant_erf_approx(int p, Complex w);

enum class TruncationMode { Optimal, Uniform };

struct TruncationScheme {
    TruncationMode mode = TruncationMode::Optimal;
    /// Index n_u in Uniform mode: every N_k equals n_u.
    std::optional<int> uniform_n;
    int k_max = 5;

    static constexpr int kOptimalCap = 40;
    static constexpr int kUniformCap = 30;

    static TruncationScheme optimal(int k_max = 5);
    static TruncationScheme uniform(int n, int k_max);

    void validate() const;
    /// N_k for this scheme at |z| = abs_z.
    int n_for(int k, double abs_z) const;
};

struct ImprovedExpansion {
    Complex value;
    /// |term at k_max| * k_max, a size estimate for the dropped terminant terms.
    double k_tail_estimate = 0.0;
    /// Accumulated terminant error estimates.
    double terminant_error = 0.0;
};

/// log G(z+1) from the exact terminant expansion, |arg z| < pi.  The
/// polynomial double sum is summed over all k (closed form via zeta tails);
/// the terminant sum is cut at scheme.k_max.
ImprovedExpansion exp_improved_log_barnes(Complex z, const TruncationScheme& scheme);

struct StokesSample {
    double theta = 0.0;
    int k = 1;
    int n_k = 0;
    /// Effective Stokes multiplier of the k-th subdominant exponential.
    Complex multiplier;
    /// Multiplier divided by its limiting value -+1/(2 pi i k^2).
    Complex normalized;
    double erf_prediction = 0.0;
};

/// Stokes multiplier profile across theta = +-pi/2 at |z| = abs_z.
/// Each theta must lie within 0.5 of pi/2 or of -pi/2.
std::vector<StokesSample> stokes_profile(double abs_z, int k, std::span<const double> thetas);

}  // namespace barnes
