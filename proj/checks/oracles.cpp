#include "oracles.hpp"

#include "sschur/errors.hpp"
#include "sschur/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace sschur::oracles {

double bessel_j(int order, double x) {
    if (x < 0.0) throw validation_error("bessel_j: x must be nonnegative");
    const int m = std::abs(order);
    const double parity = (order < 0 && m % 2 == 1) ? -1.0 : 1.0;
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;

    // start the downward recurrence well above both the order and the
    // turning point, then normalise with J_0 + 2*J_2 + 2*J_4 + ... = 1
    int start = static_cast<int>(std::max<double>(m, x) + 15.0 * std::cbrt(std::max(1.0, x))) + 30;
    if (start % 2 == 1) ++start;

    double jp = 0.0, jc = 1e-300;
    double target = 0.0, norm = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm = 2.0 * k / x * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == m) target = jc;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * jc;
        // rescale to dodge overflow on long recurrences
        if (std::abs(jc) > 1e250) {
            jc *= 1e-250;
            jp *= 1e-250;
            target *= 1e-250;
            norm *= 1e-250;
        }
    }
    return parity * target / norm;
}

namespace {

// series solutions of u'' = x u: f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1
void airy_basis(double x, double& f, double& g, double& fd, double& gd) {
    f = 1.0;
    fd = 0.0;
    g = x;
    gd = 1.0;
    double tf = 1.0, tg = x; // running terms a_n x^n
    for (int n = 0; n < 300; ++n) {
        // recurrence a_{k+3} = a_k / ((k+3)(k+2)) applied to both branches
        const int kf = 3 * n;
        const int kg = 3 * n + 1;
        tf *= x * x * x / ((kf + 3.0) * (kf + 2.0));
        tg *= x * x * x / ((kg + 3.0) * (kg + 2.0));
        f += tf;
        g += tg;
        fd += tf * (kf + 3.0) / x;
        gd += tg * (kg + 3.0) / x;
        if (std::abs(tf) + std::abs(tg) < 1e-19 * (std::abs(f) + std::abs(g))) break;
    }
}

} // namespace

double airy_series(double x) {
    const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    if (x == 0.0) return c1;
    double f, g, fd, gd;
    airy_basis(x, f, g, fd, gd);
    return c1 * f - c2 * g;
}

double airy_series_derivative(double x) {
    const double c1 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
    const double c2 = std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
    if (x == 0.0) return -c2;
    double f, g, fd, gd;
    airy_basis(x, f, g, fd, gd);
    return c1 * fd - c2 * gd;
}

namespace {

double pf_expand(std::vector<int> rows, const SkewMatrix& m) {
    const std::size_t n = rows.size();
    if (n == 0) return 1.0;
    double acc = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<int> rest;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) rest.push_back(rows[k]);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0; // (-1)^(j+1), 0-based j
        acc += sign * m.at(rows[0], rows[j]) * pf_expand(std::move(rest), m);
    }
    return acc;
}

} // namespace

double pfaffian_recursive(const SkewMatrix& m) {
    std::vector<int> rows;
    for (int i = 0; i < m.order(); ++i) rows.push_back(i);
    return pf_expand(std::move(rows), m);
}

double airy_oscillatory(int p, double x, double cutoff) {
    const auto g = [&](double t) { return std::pow(t, p + 1) / (p + 1.0) + x * t; };
    const auto gp = [&](double t) { return std::pow(t, p) + x; };

    static const QuadratureRule unit = map_to_interval(gauss_legendre(32), 0.0, 1.0);
    double acc = 0.0;
    double t0 = 0.0;
    while (t0 < cutoff) {
        const double rate = 1.0 + std::abs(gp(t0 + 1.0));
        const double h = std::min({1.0, cutoff - t0, 8.0 * std::numbers::pi / rate});
        for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
            const double t = t0 + h * unit.nodes[i];
            acc += h * unit.weights[i] * std::cos(g(t));
        }
        t0 += h;
    }
    // two integration-by-parts terms for the tail beyond the cutoff
    const double gT = g(cutoff), gpT = gp(cutoff);
    const double h2 = p * std::pow(cutoff, p - 1) / (gpT * gpT);
    acc += -std::sin(gT) / gpT + std::cos(gT) * h2 / gpT;
    return acc / std::numbers::pi;
}

double lsvk_curve(double x) {
    if (x >= 2.0) return x;
    return x + 2.0 / std::numbers::pi *
                   (std::sqrt(4.0 - x * x) - x * std::acos(x / 2.0));
}

} // namespace sschur::oracles
