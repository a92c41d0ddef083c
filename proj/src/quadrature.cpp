#include "barnes/quadrature.hpp"

#include <numbers>

#include "barnes/errors.hpp"

namespace barnes {

GaussLegendre::GaussLegendre(int order) {
    if (order < 1) throw RangeError("GaussLegendre: order must be positive");
    const auto n = static_cast<std::size_t>(order);
    nodes_.resize(n);
    weights_.resize(n);
    // Newton on P_n from the Chebyshev-like initial guess; nodes are symmetric.
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (order + 0.5L));
        long double dp = 0.0L;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        // Recompute derivative at the converged node.
        long double p0 = 1.0L, p1 = x;
        for (int k = 2; k <= order; ++k) {
            const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0L);
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        nodes_[i] = static_cast<double>(-x);
        nodes_[n - 1 - i] = static_cast<double>(x);
        weights_[i] = weights_[n - 1 - i] = static_cast<double>(w);
    }
    if (order % 2 == 1) nodes_[n / 2] = 0.0;
}

}  // namespace barnes
