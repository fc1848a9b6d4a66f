#include "sschur/limit_shape.hpp"

#include "sschur/errors.hpp"
#include "sschur/fermion_kernel.hpp"
#include "sschur/parallel.hpp"

#include <cmath>
#include <numbers>

namespace sschur {

double limit_shape(const MiwaParams& params, double x) {
    if (x < 0.0) throw validation_error("limit_shape: x must be nonnegative");
    const double b = params.b();
    if (x >= b) return x;
    const double chi = bulk_angle(params, x);
    // integral of D over [0, chi] termwise: 4 sum t_n sin(n chi)
    double integral = 0.0;
    for (const auto& [n, tn] : params.coeffs()) integral += tn * std::sin(n * chi);
    integral = 4.0 * integral - x * chi;
    return x + 2.0 / std::numbers::pi * integral;
}

double density(const MiwaParams& params, double x) {
    if (x < 0.0) throw validation_error("density: x must be nonnegative");
    if (x >= params.b()) return 0.0;
    return bulk_angle(params, x) / std::numbers::pi;
}

double expected_profile(const MiwaParams& params, double epsilon, double x, double tol) {
    if (epsilon <= 0.0 || epsilon > 1.0)
        throw validation_error("expected_profile: epsilon must lie in (0, 1]");
    if (x < 0.0) throw validation_error("expected_profile: x must be nonnegative");
    if (tol <= 0.0) throw validation_error("expected_profile: tol must be positive");

    const MiwaParams scaled = params.scaled(1.0 / epsilon);
    const JTable table(scaled);
    const long long base = std::llround(x / epsilon);

    // all terms are nonnegative, so the partial sums increase monotonically
    double sum = 0.0;
    for (long long k = 1; base + k <= table.max_index() + 1; ++k) {
        const double rho = one_point(table, base + k);
        sum += rho;
        if (rho < tol && base + k > table.bandwidth()) break;
    }
    return x + 2.0 * epsilon * sum;
}

double sine_kernel(const MiwaParams& params, double x, long long r, long long s) {
    if (x < 0.0 || x > params.b())
        throw validation_error("sine_kernel: x must lie in [0, b]");
    const double chi = bulk_angle(params, x);
    if (r == s) return chi / std::numbers::pi;
    const double d = static_cast<double>(r - s);
    return std::sin(chi * d) / (std::numbers::pi * d);
}

ShapeCurve shape_curve(const MiwaParams& params, int grid, double xmax) {
    if (grid < 1) throw validation_error("shape_curve: grid must be >= 1");
    if (xmax <= 0.0) throw validation_error("shape_curve: xmax must be positive");
    ShapeCurve curve;
    const std::size_t points = static_cast<std::size_t>(grid) + 1;
    curve.x.resize(points);
    curve.omega.resize(points);
    curve.density.resize(points);
    parallel_for(points, [&](std::size_t i) {
        const double x = xmax * static_cast<double>(i) / grid;
        curve.x[i] = x;
        curve.omega[i] = limit_shape(params, x);
        curve.density[i] = density(params, x);
    });
    return curve;
}

} // namespace sschur
