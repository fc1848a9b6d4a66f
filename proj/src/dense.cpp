#include "sschur/dense.hpp"

#include "sschur/errors.hpp"

#include <cmath>

namespace sschur {

namespace {

// LU with partial pivoting, in place. Returns the permutation sign,
// or 0 when a zero pivot column is hit.
int lu_factor(Matrix& a, std::vector<std::size_t>& perm) {
    const std::size_t n = a.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (best == 0.0) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a(i, k) / a(k, k);
            a(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return sign;
}

} // namespace

double determinant(Matrix a) {
    if (a.rows() != a.cols()) throw validation_error("determinant: matrix must be square");
    if (a.rows() == 0) return 1.0;
    std::vector<std::size_t> perm;
    const int sign = lu_factor(a, perm);
    if (sign == 0) return 0.0;
    double det = sign;
    for (std::size_t k = 0; k < a.rows(); ++k) det *= a(k, k);
    return det;
}

std::vector<double> solve(Matrix a, std::vector<double> b) {
    const std::size_t n = a.rows();
    if (n != a.cols() || n != b.size()) throw validation_error("solve: shape mismatch");
    std::vector<std::size_t> perm;
    if (lu_factor(a, perm) == 0) throw validation_error("solve: singular matrix");

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
    // forward substitution (unit lower triangle)
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= a(i, j) * x[j];
    // back substitution
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= a(i, j) * x[j];
        x[i] /= a(i, i);
    }
    return x;
}

} // namespace sschur
