#ifndef SSCHUR_FERMION_KERNEL_HPP
#define SSCHUR_FERMION_KERNEL_HPP

#include "sschur/miwa.hpp"

#include <complex>
#include <vector>

namespace sschur {

/// Wave function on the unit circle: exp(4i * sum t_n sin(n theta)).
/// Unimodular for real parameters.
std::complex<double> wave_fn(const MiwaParams& params, double theta);

/// Fourier bandwidth heuristic: coefficients beyond this index are below
/// 1e-16 in magnitude. 4*sum n|t_n| plus a cube-root transition width.
long long bandwidth_estimate(const MiwaParams& params);

/// Default trapezoid node count for the given parameters.
int default_node_count(const MiwaParams& params);

/// Fourier coefficient J(m) of the wave function by uniform trapezoid
/// quadrature with the given node count (spectrally exact once the node
/// count clears the bandwidth). Throws consistency_error when the
/// imaginary residue exceeds 1e-13.
double j_coefficient(const MiwaParams& params, long long m, int nodes);
double j_coefficient(const MiwaParams& params, long long m);

/// Cached table of J(m) for m in [0, 2*bandwidth], built in one pass via
/// an FFT over the trapezoid grid. Negative indices resolve through the
/// parity rule J(-m) = (-1)^m J(m); indices beyond the table are zero
/// (below floor_tol). Immutable after construction.
class JTable {
public:
    explicit JTable(const MiwaParams& params);

    double j(long long m) const;
    const MiwaParams& params() const { return params_; }
    long long bandwidth() const { return bandwidth_; }
    long long max_index() const { return static_cast<long long>(values_.size()) - 1; }
    double floor_tol() const { return floor_tol_; }
    int nodes() const { return nodes_; }

    /// Parseval defect: |sum over the table of J(m)^2 - 1|.
    double parseval_defect() const;

private:
    MiwaParams params_;
    std::vector<double> values_; // J(0), J(1), ..., J(max_index)
    long long bandwidth_ = 0;
    double floor_tol_ = 1e-16;
    int nodes_ = 0;
};

struct KernelValue {
    double value = 0.0;
    double bound = 0.0; // truncation error bound from the table floor
};

/// Correlation kernel K(a,b) = J(a)J(b)/2 + sum_{k>=1} (-1)^k J(a+k)J(b-k).
/// Terms whose factors both sit below tol are dropped and accounted for in
/// the reported bound; tol below the table floor has no effect.
KernelValue kernel_K(const JTable& table, long long a, long long b, double tol);
KernelValue kernel_K(const JTable& table, long long a, long long b);

/// One-point function at site m >= 1: J(m)^2/2 + sum_{k>=1} J(m+k)^2.
double one_point(const JTable& table, long long m);

} // namespace sschur

#endif
