#ifndef SSCHUR_SCHUR_Q_HPP
#define SSCHUR_SCHUR_Q_HPP

#include "sschur/miwa.hpp"
#include "sschur/strict_partition.hpp"

#include <cstdint>
#include <vector>

namespace sschur {

/// Coefficients q_0..q_nmax of the generating series exp(2 * sum t_n z^n),
/// computed by the log-derivative recurrence
/// n q_n = 2 * sum_{k odd <= n} k t_k q_{n-k}.
class QSeries {
public:
    QSeries(const MiwaParams& params, int n_max);

    const MiwaParams& params() const { return params_; }
    int n_max() const { return static_cast<int>(q_.size()) - 1; }
    /// q_n; zero for n < 0, error beyond the computed range.
    double q(int n) const;

    /// Two-row building block Q_(r,s) for r > s >= 0:
    /// q_r q_s + 2 * sum_{i=1..s} (-1)^i q_{r+i} q_{s-i}, and Q_(r,0) = q_r.
    double two_row(int r, int s) const;

private:
    MiwaParams params_;
    std::vector<double> q_;
};

/// Schur Q-function of a strict partition: Pfaffian of the two-row values
/// over the parts, odd lengths padded with a zero part.
double schur_q(const StrictPartition& lambda, const QSeries& series);
double schur_q(const StrictPartition& lambda, const MiwaParams& params);

/// Measure weight 2^(-length) * Q^2; nonnegative for real parameters.
double measure_weight(const StrictPartition& lambda, const QSeries& series);
double measure_weight(const StrictPartition& lambda, const MiwaParams& params);

/// Normalisation constant Z = exp(2 * sum n t_n^2).
double partition_function(const MiwaParams& params);

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Brute-force bracket for the probability that all sites of A are
/// occupied: enumerated mass below, plus the full truncation tail above.
Interval oracle_correlation(const std::vector<int>& sites, const MiwaParams& params,
                            long long max_size);

/// Inverse-CDF draws from the measure truncated to |lambda| <= max_size.
/// Requires the truncation tail below 1e-6 of the total mass.
/// Deterministic for a fixed seed.
std::vector<StrictPartition> sample_partitions(const MiwaParams& params, long long max_size,
                                               int count, std::uint64_t seed);

} // namespace sschur

#endif
