#include "sschur/fermion_kernel.hpp"

#include "sschur/errors.hpp"
#include "sschur/fft.hpp"

#include <cmath>
#include <numbers>

namespace sschur {

namespace {

double wave_phase(const MiwaParams& params, double theta) {
    double s = 0.0;
    for (const auto& [n, tn] : params.coeffs()) s += tn * std::sin(n * theta);
    return 4.0 * s;
}

} // namespace

std::complex<double> wave_fn(const MiwaParams& params, double theta) {
    return std::polar(1.0, wave_phase(params, theta));
}

long long bandwidth_estimate(const MiwaParams& params) {
    double reach = 0.0;
    for (const auto& [n, tn] : params.coeffs()) reach += n * std::abs(tn);
    reach *= 4.0;
    // Bessel-type transition width past the turning point
    return static_cast<long long>(std::ceil(reach + 8.0 * std::cbrt(reach) + 16.0));
}

int default_node_count(const MiwaParams& params) {
    const long long b = bandwidth_estimate(params);
    return static_cast<int>(4 * b + 64);
}

double j_coefficient(const MiwaParams& params, long long m, int nodes) {
    if (nodes < 2) throw validation_error("j_coefficient: need at least two nodes");
    // trapezoid over a full period == plain average of the samples
    double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double theta =
            -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) / nodes;
        const double arg = wave_phase(params, theta) - static_cast<double>(m) * theta;
        // Kahan accumulation, separately per component
        double y = std::cos(arg) - cre;
        double t = re + y;
        cre = (t - re) - y;
        re = t;
        y = std::sin(arg) - cim;
        t = im + y;
        cim = (t - im) - y;
        im = t;
    }
    re /= nodes;
    im /= nodes;
    if (std::abs(im) > 1e-13)
        throw consistency_error("j_coefficient: imaginary residue " + std::to_string(im));
    return re;
}

double j_coefficient(const MiwaParams& params, long long m) {
    return j_coefficient(params, m, default_node_count(params));
}

JTable::JTable(const MiwaParams& params) : params_(params) {
    bandwidth_ = bandwidth_estimate(params);
    const std::size_t m = next_pow2(static_cast<std::size_t>(default_node_count(params)));
    nodes_ = static_cast<int>(m);

    // One FFT of the sampled wave function gives every trapezoid sum
    // (1/M) sum_k wave(theta_k) exp(-i m theta_k) at once.
    std::vector<std::complex<double>> samples(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        samples[k] = wave_fn(params, theta);
    }
    fft_forward(samples);

    const long long keep = std::min<long long>(2 * bandwidth_, static_cast<long long>(m) / 2 - 1);
    values_.resize(static_cast<std::size_t>(keep) + 1);
    double worst_im = 0.0;
    for (long long i = 0; i <= keep; ++i) {
        const std::complex<double> c = samples[static_cast<std::size_t>(i)] / static_cast<double>(m);
        values_[static_cast<std::size_t>(i)] = c.real();
        worst_im = std::max(worst_im, std::abs(c.imag()));
    }
    if (worst_im > 1e-13)
        throw consistency_error("JTable: imaginary residue " + std::to_string(worst_im));
}

double JTable::j(long long m) const {
    const long long am = std::abs(m);
    if (am > max_index()) return 0.0;
    const double v = values_[static_cast<std::size_t>(am)];
    if (m >= 0) return v;
    return (am % 2 == 0) ? v : -v; // J(-m) = (-1)^m J(m)
}

double JTable::parseval_defect() const {
    // full sum over m in [-max, max]; negative side mirrors the positive one
    double sum = values_[0] * values_[0];
    for (std::size_t i = 1; i < values_.size(); ++i) sum += 2.0 * values_[i] * values_[i];
    return std::abs(sum - 1.0);
}

KernelValue kernel_K(const JTable& table, long long a, long long b, double tol) {
    if (tol <= 0.0) throw validation_error("kernel_K: tol must be positive");
    const long long top = table.max_index();
    const double floor_tol = std::max(tol, table.floor_tol());

    KernelValue out;
    out.value = 0.5 * table.j(a) * table.j(b);
    if (std::abs(a) > top || std::abs(b) > top) out.bound += 0.5 * floor_tol;

    // The left factor J(a+k) lies inside the table for k in [la, lb],
    // the right factor J(b-k) for k in [ra, rb]. Terms with both factors
    // outside are below floor_tol^2 and decay geometrically; terms with
    // one factor outside are bounded by floor_tol * |other| and belong
    // to the reported truncation bound, not the value.
    const long long la = std::max<long long>(1, -top - a), lb = top - a;
    const long long ra = std::max<long long>(1, b - top), rb = b + top;
    double comp = 0.0;
    for (long long k = la; k <= lb; ++k) {
        if (k >= ra && k <= rb) {
            const double left = table.j(a + k);
            const double right = table.j(b - k);
            if (std::abs(left) < floor_tol && std::abs(right) < floor_tol) {
                out.bound += std::abs(left * right);
                continue;
            }
            const double term = (k % 2 == 0 ? 1.0 : -1.0) * left * right;
            const double y = term - comp;
            const double t = out.value + y;
            comp = (t - out.value) - y;
            out.value = t;
        } else {
            out.bound += floor_tol * std::abs(table.j(a + k));
        }
    }
    for (long long k = ra; k <= rb; ++k)
        if (k < la || k > lb) out.bound += floor_tol * std::abs(table.j(b - k));
    out.bound += 2.0 * floor_tol * floor_tol;
    return out;
}

KernelValue kernel_K(const JTable& table, long long a, long long b) {
    return kernel_K(table, a, b, table.floor_tol());
}

double one_point(const JTable& table, long long m) {
    if (m < 1) throw validation_error("one_point: site must be >= 1");
    // all-positive rewriting of (-1)^m K(m,-m); no cancellation
    double sum = 0.5 * table.j(m) * table.j(m);
    const long long top = table.max_index();
    for (long long k = 1; m + k <= top; ++k) {
        const double v = table.j(m + k);
        sum += v * v;
    }
    return sum;
}

} // namespace sschur
