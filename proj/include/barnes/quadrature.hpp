#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace barnes {

/// n-point Gauss-Legendre rule on [-1, 1].
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    int order() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    /// int_a^b f(t) dt.  f may return double or std::complex<double>.
    template <class F>
    auto integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        using R = decltype(f(mid));
        R sum{};
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * f(mid + half * nodes_[i]);
        }
        return sum * half;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Result of integrating one panel with an embedded lower-order companion.
template <class R>
struct PanelEstimate {
    R value;
    double error;
};

/// Integrates with `fine` and `coarse` and reports |fine - coarse| as the error.
template <class F>
auto integrate_panel(const GaussLegendre& fine, const GaussLegendre& coarse, F&& f,
                     double a, double b) {
    auto v = fine.integrate(f, a, b);
    auto c = coarse.integrate(f, a, b);
    using R = decltype(v);
    return PanelEstimate<R>{v, std::abs(v - c)};
}

/// int_0^b f with panels [b 2^{-j-1}, b 2^{-j}], j < levels, plus the
/// remaining sliver [0, b 2^{-levels}] by a single panel.  For integrands with
/// an integrable log or power singularity at the origin.
template <class F>
auto integrate_graded_at_zero(const GaussLegendre& rule, F&& f, double b, int levels = 60) {
    double hi = b;
    using R = decltype(f(0.5 * b));
    R sum{};
    for (int j = 0; j < levels; ++j) {
        const double lo = 0.5 * hi;
        sum += rule.integrate(f, lo, hi);
        hi = lo;
    }
    sum += rule.integrate(f, 0.0, hi);
    return sum;
}

}  // namespace barnes
