#include "sschur/schur_q.hpp"

#include "sschur/errors.hpp"
#include "sschur/skew_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace sschur {

QSeries::QSeries(const MiwaParams& params, int n_max) : params_(params) {
    if (n_max < 0) throw validation_error("QSeries: n_max must be >= 0");
    q_.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    q_[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        double s = 0.0;
        for (const auto& [k, tk] : params.coeffs()) {
            if (k > n) break;
            s += 2.0 * k * tk * q_[static_cast<std::size_t>(n - k)];
        }
        q_[static_cast<std::size_t>(n)] = s / n;
    }
}

double QSeries::q(int n) const {
    if (n < 0) return 0.0;
    if (n > n_max())
        throw validation_error("QSeries: coefficient index beyond computed range");
    return q_[static_cast<std::size_t>(n)];
}

double QSeries::two_row(int r, int s) const {
    if (r <= s || s < 0) throw validation_error("QSeries::two_row: need r > s >= 0");
    double v = q(r) * q(s);
    for (int i = 1; i <= s; ++i)
        v += 2.0 * (i % 2 == 0 ? 1.0 : -1.0) * q(r + i) * q(s - i);
    return v;
}

double schur_q(const StrictPartition& lambda, const QSeries& series) {
    const int l = lambda.length();
    if (l == 0) return 1.0;

    // parts, padded to even length with a zero part
    std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
    if (l % 2 == 1) rows.push_back(0);
    const int n = static_cast<int>(rows.size());

    if (n == 2) return series.two_row(rows[0], rows[1]);
    SkewMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.set_upper(i, j, series.two_row(rows[static_cast<std::size_t>(i)],
                                             rows[static_cast<std::size_t>(j)]));
    return pfaffian(std::move(m));
}

namespace {

int series_length_for(const StrictPartition& lambda) {
    const auto& parts = lambda.parts();
    const int l1 = parts.empty() ? 0 : parts[0];
    const int l2 = parts.size() > 1 ? parts[1] : 0;
    return l1 + l2 + 2;
}

} // namespace

double schur_q(const StrictPartition& lambda, const MiwaParams& params) {
    return schur_q(lambda, QSeries(params, series_length_for(lambda)));
}

double measure_weight(const StrictPartition& lambda, const QSeries& series) {
    const double q = schur_q(lambda, series);
    return std::ldexp(q * q, -lambda.length()); // 2^(-l) Q^2
}

double measure_weight(const StrictPartition& lambda, const MiwaParams& params) {
    return measure_weight(lambda, QSeries(params, series_length_for(lambda)));
}

double partition_function(const MiwaParams& params) {
    double s = 0.0;
    for (const auto& [n, tn] : params.coeffs()) s += 2.0 * n * tn * tn;
    return std::exp(s);
}

Interval oracle_correlation(const std::vector<int>& sites, const MiwaParams& params,
                            long long max_size) {
    const double z = partition_function(params);
    const QSeries series(params, static_cast<int>(max_size + 2));
    double hit = 0.0, total = 0.0;
    for_each_strict(max_size, [&](const StrictPartition& lambda) {
        const double w = measure_weight(lambda, series);
        total += w;
        bool covers = true;
        for (int s : sites)
            if (!lambda.contains(s)) {
                covers = false;
                break;
            }
        if (covers) hit += w;
    });
    const double tail = std::max(0.0, 1.0 - total / z);
    return {hit / z, hit / z + tail};
}

namespace {

// splitmix64: counter-based generator, identical streams on every platform
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { // in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

} // namespace

std::vector<StrictPartition> sample_partitions(const MiwaParams& params, long long max_size,
                                               int count, std::uint64_t seed) {
    if (count < 0) throw validation_error("sample_partitions: count must be >= 0");
    const double z = partition_function(params);
    const QSeries series(params, static_cast<int>(max_size + 2));

    std::vector<StrictPartition> support;
    std::vector<double> cumulative;
    double total = 0.0;
    for_each_strict(max_size, [&](const StrictPartition& lambda) {
        total += measure_weight(lambda, series);
        support.push_back(lambda);
        cumulative.push_back(total);
    });
    if (z - total > 1e-6 * z)
        throw validation_error("sample_partitions: truncation tail above 1e-6 of the mass");

    SplitMix64 rng(seed);
    std::vector<StrictPartition> draws;
    draws.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double u = rng.uniform() * total;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t idx =
            std::min(support.size() - 1,
                     static_cast<std::size_t>(std::distance(cumulative.begin(), it)));
        draws.push_back(support[idx]);
    }
    return draws;
}

} // namespace sschur
