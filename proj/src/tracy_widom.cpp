#include "sschur/tracy_widom.hpp"

#include "sschur/errors.hpp"
#include "sschur/higher_airy.hpp"
#include "sschur/parallel.hpp"
#include "sschur/quadrature.hpp"

#include <cmath>

namespace sschur {

NystromScheme build_nystrom(int p, double s, int n, QuadratureFamily family,
                            double length_override) {
    if (n < 16) throw validation_error("build_nystrom: need at least 16 nodes");

    NystromScheme scheme;
    scheme.p = p;
    scheme.s = s;
    scheme.family = family;
    scheme.length =
        length_override > 0.0 ? length_override : std::max(10.0, airy_kernel_cutoff(p, s));

    QuadratureRule base = family == QuadratureFamily::GaussLegendre
                              ? gauss_legendre(n)
                              : clenshaw_curtis(n - 1); // n nodes either way
    QuadratureRule rule = map_to_interval(base, s, s + scheme.length);
    scheme.nodes = std::move(rule.nodes);
    scheme.weights = std::move(rule.weights);

    // Shared z-grid for every entry: the kernel matrix becomes the Gram
    // matrix B B^T with B[i][k] = sqrt(v_k) Ai(x_i + z_k), which keeps it
    // symmetric positive semidefinite by construction.
    const double cutoff = airy_kernel_cutoff(p, s);
    const QuadratureRule unit = map_to_interval(gauss_legendre(32), 0.0, 1.0);
    std::vector<double> z_nodes, z_weights;
    for (double z0 = 0.0; z0 < cutoff; z0 += 1.0) {
        const double h = std::min(1.0, cutoff - z0);
        for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
            z_nodes.push_back(z0 + h * unit.nodes[i]);
            z_weights.push_back(h * unit.weights[i]);
        }
    }

    const AiryEvaluator eval(p);
    const std::size_t nn = scheme.nodes.size();
    const std::size_t nz = z_nodes.size();
    Matrix b(nn, nz);
    parallel_for(nn, [&](std::size_t i) {
        for (std::size_t k = 0; k < nz; ++k)
            b(i, k) = std::sqrt(z_weights[k]) * eval(scheme.nodes[i] + z_nodes[k]);
    });

    scheme.kernel = Matrix(nn, nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i; j < nn; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < nz; ++k) acc += b(i, k) * b(j, k);
            scheme.kernel(i, j) = acc;
            scheme.kernel(j, i) = acc;
        }
    return scheme;
}

double fredholm_det(const NystromScheme& scheme) {
    const std::size_t n = scheme.nodes.size();
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double sym =
                std::sqrt(scheme.weights[i] * scheme.weights[j]) * scheme.kernel(i, j);
            a(i, j) = (i == j ? 1.0 : 0.0) - sym;
        }
    return determinant(std::move(a));
}

double fredholm_det(int p, double s, int n, QuadratureFamily family, double length_override) {
    const double coarse = fredholm_det(build_nystrom(p, s, n, family, length_override));
    const double fine = fredholm_det(build_nystrom(p, s, 2 * n, family, length_override));
    if (std::abs(fine - coarse) > 1e-6)
        throw consistency_error("fredholm_det: node doubling moved the value by " +
                                std::to_string(std::abs(fine - coarse)));
    return fine;
}

double tw_cdf(int p, double s) {
    if (s < -10.0 || s > 10.0)
        throw validation_error("tw_cdf: s must lie in [-10, 10]");
    return fredholm_det(p, s, 64);
}

} // namespace sschur
