#include "sschur/higher_airy.hpp"

#include "sschur/errors.hpp"
#include "sschur/quadrature.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace sschur {

namespace {

const QuadratureRule& panel_rule() {
    static const QuadratureRule rule = map_to_interval(gauss_legendre(32), 0.0, 1.0);
    return rule;
}

} // namespace

AiryEvaluator::AiryEvaluator(int p, int refinement) : p_(p), refinement_(refinement) {
    if (p < 2 || p % 2 != 0)
        throw validation_error("AiryEvaluator: p must be even and >= 2");
    if (refinement < 1) throw validation_error("AiryEvaluator: refinement must be >= 1");
    sign_ = (p / 2 + 1) % 2 == 0 ? 1.0 : -1.0;
    // characteristic roots tau^p = sign; the fastest decay goes with the
    // largest real part
    const double phi0 = sign_ > 0 ? 0.0 : std::numbers::pi;
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < p; ++j)
        best = std::max(best, std::cos((phi0 + 2.0 * std::numbers::pi * j) / p));
    decay_rate_ = best;

    // Junction placement for positive arguments: slide along the real axis
    // to minimise the largest integrand magnitude over the rays. The
    // minimax functional is scale-invariant (sigma = ratio * x^(1/p)), so
    // the ratio is found once here, on the normalised form. For p = 2 it
    // lands on the saddle point and removes the cancellation entirely; for
    // larger p it keeps the transient within a comfortable noise budget.
    const double pp1 = static_cast<double>(p) + 1.0;
    const std::complex<double> dir = std::polar(1.0, std::numbers::pi / 2.0 -
                                                         std::numbers::pi / (2.0 * pp1));
    const double reach = 2.0 * (std::pow(62.0 * pp1, 1.0 / pp1) + 1.3 * decay_rate_ + 3.0);
    const auto ray_peak = [&](double t) {
        double peak = -std::numeric_limits<double>::infinity();
        for (int j = 0; j <= 200; ++j) {
            const double rho = reach * std::pow(j / 200.0, 2);
            const std::complex<double> w = t + rho * dir;
            const double e = (sign_ * std::pow(w, static_cast<int>(pp1)) / pp1 - w).real();
            peak = std::max(peak, e);
        }
        return peak;
    };
    junction_ratio_ = 0.0;
    double best_peak = ray_peak(0.0);
    for (int j = 1; j <= 39; ++j) {
        const double t = 1.3 * decay_rate_ * j / 39.0;
        const double peak = ray_peak(t);
        if (peak < best_peak) {
            best_peak = peak;
            junction_ratio_ = t;
        }
    }
}

double AiryEvaluator::operator()(double x) const {
    const auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    return integrate(x, 0);
}

double AiryEvaluator::derivative(double x, int k) const {
    if (k < 0 || k > p_)
        throw validation_error("AiryEvaluator::derivative: order must lie in [0, p]");
    if (k == 0) return (*this)(x);
    return integrate(x, k);
}

void AiryEvaluator::tabulate(const std::vector<double>& xs) {
    for (double x : xs) cache_[x] = integrate(x, 0);
}

double AiryEvaluator::integrate(double x, int k) const {
    if (std::abs(x) > 50.0)
        throw validation_error("AiryEvaluator: argument outside the supported range |x| <= 50");

    const double pp1 = static_cast<double>(p_) + 1.0;
    // mid-sector descent angle, measured from the vertical
    double beta = std::numbers::pi / (2.0 * pp1);
    double junction = 0.0;
    if (x > 0.0) {
        junction = junction_ratio_ * std::pow(x, 1.0 / p_);
    } else if (x < 0.0) {
        // steepen toward the vertical until the transient growth of the
        // integrand stays within a fixed cancellation budget
        const auto growth = [&](double bb) {
            return (p_ / pp1) * std::pow(-x * std::sin(bb), pp1 / p_) /
                   std::pow(std::sin(pp1 * bb), 1.0 / p_);
        };
        while (growth(beta) > 25.0 && beta > 1e-3) beta *= 0.75;
    }
    const double alpha = std::numbers::pi / 2.0 - beta; // ray angle from the real axis
    const std::complex<double> up_dir = std::polar(1.0, alpha);
    const std::complex<double> down_dir = std::conj(up_dir);

    const auto integrand = [&](double r, const std::complex<double>& dir) {
        const std::complex<double> zeta = junction + r * dir;
        const std::complex<double> expo =
            sign_ * std::pow(zeta, static_cast<int>(pp1)) / pp1 - x * zeta;
        std::complex<double> f = std::exp(expo) * dir;
        for (int i = 0; i < k; ++i) f *= -zeta;
        return f;
    };

    const QuadratureRule& rule = panel_rule();
    std::complex<double> upper(0.0, 0.0), lower(0.0, 0.0);
    double r0 = 0.0;
    double peak = -std::numeric_limits<double>::infinity();
    int panels = 0;
    while (true) {
        // keep both the phase sweep and the magnitude swing per panel
        // within what 32 Gauss nodes resolve
        const double rate = 1.0 + std::abs(x) + std::pow(junction + r0 + 1.0, p_);
        const double h = std::min(1.0, 8.0 * std::numbers::pi / rate) / refinement_;
        double panel_peak = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = r0 + h * rule.nodes[i];
            const double w = h * rule.weights[i];
            const std::complex<double> fu = integrand(r, up_dir);
            upper += w * fu;
            lower += w * integrand(r, down_dir);
            panel_peak = std::max(panel_peak, std::log(std::abs(fu) + 1e-300));
        }
        peak = std::max(peak, panel_peak);
        r0 += h;
        ++panels;
        if (panel_peak < peak - 45.0) break;
        if (panels > 20000)
            throw consistency_error("AiryEvaluator: contour quadrature failed to localise");
    }

    // contour runs from the lower-ray infinity through the junction to the
    // upper-ray infinity
    const std::complex<double> total = (upper - lower) / (2.0 * std::numbers::pi *
                                                          std::complex<double>(0.0, 1.0));
    // rays are mirror images, so the residue sits at rounding level; the
    // threshold scales with the integrand peak to stay meaningful for
    // arguments with a large transient
    const double residue_scale = std::max(1.0, std::exp(std::min(peak, 300.0)));
    if (std::abs(total.imag()) > 1e-12 * residue_scale)
        throw consistency_error("AiryEvaluator: imaginary residue " +
                                std::to_string(total.imag()));
    return total.real();
}

double airy_p(int p, double x) { return AiryEvaluator(p)(x); }

double airy_derivative(int p, double x, int k) { return AiryEvaluator(p).derivative(x, k); }

double airy_kernel_cutoff(int p, double left_edge) {
    // decay bound: the tail of the squared function past w contributes
    // about exp(-2 (p/(p+1)) Re(tau) w^((p+1)/p)); push it below 1e-12
    const AiryEvaluator eval(p); // for the decay rate only
    const double pp1 = static_cast<double>(p) + 1.0;
    const double w = std::pow(30.0 * pp1 / (2.0 * p * eval.decay_rate()), p / pp1);
    return std::max(1.0, w - left_edge);
}

double airy_kernel(int p, double x, double y) {
    const AiryEvaluator eval(p);
    const double cutoff = airy_kernel_cutoff(p, std::min(x, y));
    const QuadratureRule& rule = panel_rule();
    double acc = 0.0;
    double z0 = 0.0;
    while (z0 < cutoff) {
        const double h = std::min(1.0, cutoff - z0);
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double z = z0 + h * rule.nodes[i];
            panel += h * rule.weights[i] * eval(x + z) * eval(y + z);
        }
        acc += panel;
        z0 += h;
        if (std::abs(panel) < 1e-15 * (1.0 + std::abs(acc)) && std::min(x, y) + z0 > 1.0) break;
    }
    return acc;
}

} // namespace sschur
