#ifndef SSCHUR_SCALING_LAB_HPP
#define SSCHUR_SCALING_LAB_HPP

#include "sschur/miwa.hpp"

#include <string>
#include <vector>

namespace sschur {

/// Rescaled Fourier coefficient at the edge for the minimal p-multicritical
/// parameters: (1/eps) J(floor(a/eps^(p+1) + x/eps)) under coefficients
/// scaled by eps^-(p+1). Converges to the degree-p Airy function at x.
double edge_j(int p, double x, double epsilon);

struct EdgeKernelBlocks {
    double plus_plus = 0.0;   // both sites right of the origin; limit 0
    double plus_minus = 0.0;  // mixed block; limit is the degree-p Airy kernel
    double minus_minus = 0.0; // both sites reflected; limit 0
};

EdgeKernelBlocks edge_kernel(int p, double x, double y, double epsilon);

struct PfDetPair {
    double scaled_pfaffian = 0.0;    // Pf of the correlation matrix over eps^N
    double limit_determinant = 0.0;  // det of the Airy-kernel matrix
};

/// Rescaled multi-site correlation against its determinantal limit.
/// At most 4 points.
PfDetPair pfaffian_to_determinant_check(int p, const std::vector<double>& points,
                                        double epsilon);

/// Distribution of the largest part at mesh epsilon: the gap probability of
/// every site above floor(a/eps^(p+1) + s/eps), cut off where the one-point
/// function drops below 1e-14.
double largest_part_law(int p, double s, double epsilon);

/// Rescaled kernel in the bulk at position x: converges to the sine kernel.
double bulk_kernel(const MiwaParams& params, double x, long long r, long long s,
                   double epsilon);

struct ScalingRow {
    double epsilon = 0.0;
    std::vector<double> args;
    double finite_value = 0.0;
    double limit_value = 0.0;
    double abs_error = 0.0;
};

struct ScalingReport {
    std::string target;
    int p = 2;
    std::vector<ScalingRow> rows; // sorted by decreasing epsilon, then argument
};

ScalingReport edge_j_report(int p, std::vector<double> eps_list, std::vector<double> args);
ScalingReport edge_kernel_report(int p, std::vector<double> eps_list, std::vector<double> args);
ScalingReport pfdet_report(int p, std::vector<double> eps_list, std::vector<double> points);
ScalingReport largest_part_report(int p, std::vector<double> eps_list, std::vector<double> args);

} // namespace sschur

#endif
