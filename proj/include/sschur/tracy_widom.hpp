#ifndef SSCHUR_TRACY_WIDOM_HPP
#define SSCHUR_TRACY_WIDOM_HPP

#include "sschur/dense.hpp"

#include <vector>

namespace sschur {

enum class QuadratureFamily { GaussLegendre, ClenshawCurtis };

/// Discretisation of the edge-kernel operator on [s, s+length]: quadrature
/// nodes/weights plus the symmetric matrix of kernel samples.
struct NystromScheme {
    int p = 2;
    double s = 0.0;
    double length = 0.0;
    QuadratureFamily family = QuadratureFamily::GaussLegendre;
    std::vector<double> nodes;
    std::vector<double> weights;
    Matrix kernel; // kernel(x_i, x_j), n x n
};

/// Builds the scheme with n nodes. The truncation length follows the
/// kernel decay bound (tail < 1e-12) with a floor of 10, unless overridden.
NystromScheme build_nystrom(int p, double s, int n,
                            QuadratureFamily family = QuadratureFamily::GaussLegendre,
                            double length_override = 0.0);

/// det(I - W^(1/2) K W^(1/2)) over the scheme.
double fredholm_det(const NystromScheme& scheme);

/// Fredholm determinant of the edge kernel on [s, infinity), evaluated at
/// n and 2n nodes; throws consistency_error when doubling moves the value
/// by more than 1e-6, otherwise returns the refined value.
double fredholm_det(int p, double s, int n,
                    QuadratureFamily family = QuadratureFamily::GaussLegendre,
                    double length_override = 0.0);

/// Distribution of the rescaled largest part: fredholm_det at a converged
/// node count. Requires s in [-10, 10].
double tw_cdf(int p, double s);

} // namespace sschur

#endif
