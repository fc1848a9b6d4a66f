#ifndef SSCHUR_LIMIT_SHAPE_HPP
#define SSCHUR_LIMIT_SHAPE_HPP

#include "sschur/miwa.hpp"

#include <vector>

namespace sschur {

/// Limit shape of the rescaled diagram profile,
/// x + (2/pi) * integral_0^chi(x) (D(theta) - x) d(theta) for x in [0, b],
/// and x beyond the edge. The integral is the exact antiderivative of the
/// finite cosine sum; the only error source is the bulk-angle root solve.
double limit_shape(const MiwaParams& params, double x);

/// Particle density in the bulk: bulk_angle(x)/pi on [0, b], zero beyond.
double density(const MiwaParams& params, double x);

/// Expectation of the rescaled profile at mesh epsilon:
/// x + 2*eps * sum_{k>=1} rho(x/eps + k) under coefficients scaled by 1/eps.
/// x/eps is snapped to the nearest lattice site.
double expected_profile(const MiwaParams& params, double epsilon, double x,
                        double tol = 1e-12);

/// Bulk two-point kernel sin(chi(x)(r-s)) / (pi (r-s)); density on the diagonal.
double sine_kernel(const MiwaParams& params, double x, long long r, long long s);

struct ShapeCurve {
    std::vector<double> x;
    std::vector<double> omega;
    std::vector<double> density;
};

/// Sampled curve on grid+1 equispaced points of [0, xmax].
ShapeCurve shape_curve(const MiwaParams& params, int grid, double xmax);

} // namespace sschur

#endif
