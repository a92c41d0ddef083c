#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "barnes/special_functions.hpp"

namespace barnes {

/// Which estimate produced a remainder bound.
enum class BoundSource {
    Sector,            // first omitted term times 1 / min(|csc 2theta|, sqrt(e(2N+5/2))/2), |theta| <= pi/2
    SecantHalfAngle,   // first omitted term times sec^{2N+1}(theta/2), |theta| < pi
    RotatedPath,       // first omitted term times csc(2(theta-phi*)) sec^{2N+1}(phi*), pi/4 < |theta| < pi
    PositiveAxisSign,  // z > 0: remainder has the sign of, and is smaller than, the first omitted term
};

std::string_view to_string(BoundSource source);

struct BoundReport {
    double bound = 0.0;
    /// Multiplier of the first-omitted-term magnitude.
    double factor = 0.0;
    std::optional<double> phi_star;
    BoundSource theorem = BoundSource::Sector;
};

struct ExpansionResult {
    Complex value;
    int n_trunc = 1;
    double bound = 0.0;
    BoundSource bound_source = BoundSource::Sector;
    BoundReport report;
    /// Set when the winning factor exceeds kWeakFactor (close to the cut).
    bool weak = false;
    /// Real positive z: the remainder has the sign of the first omitted term.
    bool sign_guaranteed = false;
};

inline constexpr int kMaxTruncation = 20;
inline constexpr double kWeakFactor = 1e6;

/// Throws DomainError unless z is finite, nonzero and off the negative real axis.
void require_cut_plane(Complex z, const char* who);

/// z^2/4 + z log Gamma(z+1) - (z(z+1)/2 + 1/12) log z - log A
Complex log_barnes_prefix(Complex z);

/// Prefix plus the first n_trunc - 1 terms of the Bernoulli series, i.e.
/// log G(z+1) - R_N(z).
Complex truncated_log_barnes(Complex z, int n_trunc);

/// The classical Barnes form: -3/4 z^2 + z/2 log 2pi + (z^2/2 - 1/12) log z
/// + 1/12 - log A + sum_{n<N} B_{2n+2} / (2n (2n+2) z^{2n}).
Complex barnes_style_series(Complex z, int n_trunc);

/// |B_{2N+2}| / (2N (2N+1) (2N+2) |z|^{2N})
double first_omitted_term(double abs_z, int n_trunc);

/// 1 for |theta| <= pi/4, |csc 2theta| for pi/4 < |theta| < pi/2, +inf at |theta| = pi/2.
double sector_factor(double theta);

/// Sector bound (|theta| <= pi/2 only).
BoundReport bound_sector(Complex z, int n_trunc);
/// Half-angle secant bound (|theta| < pi).
BoundReport bound_secant_half_angle(Complex z, int n_trunc);
/// Smaller of the two bounds above that apply at z.
BoundReport bound_thm2(Complex z, int n_trunc);

/// (2N+3) cos(3 phi - 2 theta) - (2N-1) cos(phi - 2 theta)
double phi_star_residual(double phi, double theta, int n_trunc);

/// Optimal rotation angle for pi/4 < |theta| < pi: the unique root of the
/// residual above in the bracket that keeps the rotated path admissible.
double solve_phi_star(double theta, int n_trunc);

/// Rotated-path bound at the optimal angle, pi/4 < |arg z| < pi.
BoundReport bound_thm3(Complex z, int n_trunc);

/// Every bound that is valid at (z, N), in a fixed order.
std::vector<BoundReport> applicable_bounds(Complex z, int n_trunc);

/// Truncated expansion with the smallest certified bound.  Without n_trunc,
/// N is the argmin of that bound over 1..kMaxTruncation (ties to smaller N).
ExpansionResult certified_eval(Complex z, std::optional<int> n_trunc = std::nullopt);

}  // namespace barnes
