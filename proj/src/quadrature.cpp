#include "sschur/quadrature.hpp"

#include "sschur/errors.hpp"

#include <cmath>
#include <numbers>

namespace sschur {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw validation_error("gauss_legendre: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-type initial guess for the i-th root of P_n
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // evaluate P_n and P_n' by the three-term recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

QuadratureRule clenshaw_curtis(int n) {
    if (n < 1) throw validation_error("clenshaw_curtis: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n) + 1);
    rule.weights.resize(static_cast<std::size_t>(n) + 1);

    // f(cos t) = sum a_k cos(k t); integrating cos(k t) sin t over [0,pi]
    // gives 2/(1-k^2) for even k, 0 for odd k. The a_k come from a DCT-I.
    for (int j = 0; j <= n; ++j) {
        const double theta = std::numbers::pi * static_cast<double>(j) / n;
        double w = 0.0;
        for (int k = 0; k <= n; k += 2) {
            double term = 2.0 / (1.0 - static_cast<double>(k) * k);
            if (k == 0) term = 2.0;
            if (k == 0 || k == n) term *= 0.5;
            w += term * std::cos(k * theta);
        }
        w *= 2.0 / n;
        if (j == 0 || j == n) w *= 0.5;
        rule.nodes[static_cast<std::size_t>(j)] = -std::cos(theta);
        rule.weights[static_cast<std::size_t>(j)] = w;
    }
    return rule;
}

QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b) {
    QuadratureRule out;
    out.nodes.reserve(rule.nodes.size());
    out.weights.reserve(rule.weights.size());
    const double mid = 0.5 * (a + b);
    const double halfw = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        out.nodes.push_back(mid + halfw * rule.nodes[i]);
        out.weights.push_back(halfw * rule.weights[i]);
    }
    return out;
}

} // namespace sschur
