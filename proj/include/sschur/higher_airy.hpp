#ifndef SSCHUR_HIGHER_AIRY_HPP
#define SSCHUR_HIGHER_AIRY_HPP

#include <map>
#include <vector>

namespace sschur {

/// Entire solution of (-1)^(p/2+1) u^(p) = x u that decays fastest on the
/// positive axis, evaluated by quadrature over a two-ray descent contour.
///
/// The rays run at the mid-sector descent angles. For positive arguments
/// the junction sits at the saddle abscissa instead of the origin, which
/// keeps the integrand maximum at the scale of the result; for negative
/// arguments the ray angle steepens toward vertical to cap the transient
/// growth of the integrand. Evaluations are pure; the cache is only
/// written by tabulate() and is read-only afterwards.
class AiryEvaluator {
public:
    /// refinement > 1 shrinks every quadrature panel by that factor; the
    /// default resolution already clears machine precision, so this only
    /// serves stability checks.
    explicit AiryEvaluator(int p, int refinement = 1);

    int p() const { return p_; }
    /// Largest real part among the characteristic roots; controls the
    /// decay exponent -(p/(p+1)) * decay_rate() * x^((p+1)/p).
    double decay_rate() const { return decay_rate_; }

    double operator()(double x) const;
    /// k-th derivative, 0 <= k <= p, by the same contour with the extra
    /// monomial factor in the integrand.
    double derivative(double x, int k) const;

    void tabulate(const std::vector<double>& xs);

private:
    double integrate(double x, int k) const;

    int p_;
    int refinement_ = 1;
    double sign_;           // (-1)^(p/2+1) in the exponent
    double decay_rate_;     // Re tau_*
    double junction_ratio_; // junction = ratio * x^(1/p) for positive x
    std::map<double, double> cache_;
};

double airy_p(int p, double x);
double airy_derivative(int p, double x, int k);

/// Gram kernel integral_0^infty Ai_p(x+z) Ai_p(y+z) dz, truncated where
/// the decay bound puts the tail below 1e-12.
double airy_kernel(int p, double x, double y);

/// Truncation point for kernel integrals starting at the given left edge.
double airy_kernel_cutoff(int p, double left_edge);

} // namespace sschur

#endif
