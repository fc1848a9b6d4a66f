#ifndef SSCHUR_QUADRATURE_HPP
#define SSCHUR_QUADRATURE_HPP

#include <vector>

namespace sschur {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]. Newton iteration on the Legendre
// recurrence; accurate to machine precision for n up to a few thousand.
QuadratureRule gauss_legendre(int n);

// Clenshaw-Curtis rule with n+1 nodes on [-1, 1] (endpoints included),
// exact for polynomials of degree n.
QuadratureRule clenshaw_curtis(int n);

// Affine map of a rule from [-1, 1] to [a, b].
QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b);

} // namespace sschur

#endif
