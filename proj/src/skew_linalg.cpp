#include "sschur/skew_linalg.hpp"

#include "sschur/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sschur {

SkewMatrix::SkewMatrix(int order) : order_(order) {
    if (order < 0 || order % 2 != 0)
        throw validation_error("SkewMatrix: order must be even and nonnegative");
    data_.assign(static_cast<std::size_t>(order) * order, 0.0);
}

void SkewMatrix::set_upper(int i, int j, double value) {
    if (i < 0 || j <= i || j >= order_)
        throw validation_error("SkewMatrix::set_upper: need 0 <= i < j < order");
    data_[static_cast<std::size_t>(i) * order_ + j] = value;
    data_[static_cast<std::size_t>(j) * order_ + i] = -value;
}

double pfaffian(SkewMatrix m) {
    const int n = m.order();
    if (n == 0) return 1.0;

    // Work on a mutable copy of the dense storage through a tiny view.
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    const auto at = [&a, n](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * n + j];
    };
    const auto swap_rc = [&](int p, int q) {
        if (p == q) return;
        for (int j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
        for (int i = 0; i < n; ++i) std::swap(at(i, p), at(i, q));
    };

    double pf = 1.0;
    for (int k = 0; k + 1 < n; k += 2) {
        // complete pivot: largest entry of the trailing block moves to (k, k+1)
        int pi = k, pj = k + 1;
        double best = 0.0;
        for (int i = k; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(at(i, j)) > best) {
                    best = std::abs(at(i, j));
                    pi = i;
                    pj = j;
                }
        if (best == 0.0) return 0.0;
        if (pi != k) {
            swap_rc(pi, k);
            pf = -pf;
        }
        if (pj != k + 1) {
            swap_rc(pj, k + 1);
            pf = -pf;
        }

        const double pivot = at(k, k + 1);
        pf *= pivot;
        // congruence zeroing column k below row k+1; it leaves the
        // Pfaffian unchanged, and rows k, k+1 drop out of the recursion
        for (int i = k + 2; i < n; ++i) {
            const double mu = at(i, k) / at(k + 1, k);
            if (mu == 0.0) continue;
            for (int j = k + 1; j < n; ++j) {
                if (j == i) continue;
                at(i, j) -= mu * at(k + 1, j);
                at(j, i) = -at(i, j);
            }
        }
    }
    return pf;
}

SkewMatrix correlation_matrix(std::vector<int> sites, const JTable& table) {
    for (int s : sites)
        if (s <= 0) throw validation_error("correlation_matrix: sites must be positive");
    std::sort(sites.begin(), sites.end(), std::greater<int>());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw validation_error("correlation_matrix: sites must be distinct");

    const int n = static_cast<int>(sites.size());
    SkewMatrix m(2 * n);
    const auto sign = [](long long s) { return s % 2 == 0 ? 1.0 : -1.0; };
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = i + 1; j < 2 * n; ++j) {
            double v = 0.0;
            if (j < n) {
                v = kernel_K(table, sites[static_cast<std::size_t>(i)],
                             sites[static_cast<std::size_t>(j)]).value;
            } else if (i < n) {
                const int bj = sites[static_cast<std::size_t>(2 * n - j - 1)];
                v = sign(bj) * kernel_K(table, sites[static_cast<std::size_t>(i)], -bj).value;
            } else {
                const int bi = sites[static_cast<std::size_t>(2 * n - i - 1)];
                const int bj = sites[static_cast<std::size_t>(2 * n - j - 1)];
                v = sign(bi + bj) * kernel_K(table, -bi, -bj).value;
            }
            m.set_upper(i, j, v);
        }
    }
    return m;
}

namespace {

double double_factorial(int n) {
    double r = 1.0;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}

// Coarse perturbation bound for the Pfaffian under entrywise errors:
// number of expansion terms times the worst entry raised to the number
// of remaining factors.
double pfaffian_bound(const SkewMatrix& m, double entry_bound) {
    const int n = m.order();
    if (n == 0) return 0.0;
    double worst = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(m.at(i, j)));
    const int pairs = n / 2;
    return entry_bound * pairs * double_factorial(n - 1) * std::pow(worst, pairs - 1);
}

} // namespace

CorrelationResult correlation(std::vector<int> sites, const JTable& table) {
    if (sites.empty()) return {1.0, 0.0};
    double entry_bound = 0.0;
    for (std::size_t i = 0; i < sites.size(); ++i)
        for (std::size_t j = 0; j < sites.size(); ++j) {
            entry_bound = std::max(entry_bound, kernel_K(table, sites[i], sites[j]).bound);
            entry_bound = std::max(entry_bound, kernel_K(table, sites[i], -sites[j]).bound);
            entry_bound = std::max(entry_bound, kernel_K(table, -sites[i], -sites[j]).bound);
        }
    SkewMatrix m = correlation_matrix(std::move(sites), table);
    return {pfaffian(m), pfaffian_bound(m, entry_bound)};
}

CorrelationResult correlation(std::vector<int> sites, const MiwaParams& params) {
    const JTable table(params);
    return correlation(std::move(sites), table);
}

double gap_probability_inclusion_exclusion(const std::vector<int>& sites, const JTable& table) {
    if (sites.size() > 20)
        throw validation_error("gap_probability_inclusion_exclusion: set too large");
    const std::size_t n = sites.size();
    double sum = 0.0;
    for (std::size_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1ULL << b)) subset.push_back(sites[b]);
        const double rho = correlation(std::move(subset), table).value;
        sum += (std::popcount(mask) % 2 == 0 ? rho : -rho);
    }
    return sum;
}

double gap_probability_block_pfaffian(const std::vector<int>& sites, const JTable& table) {
    if (2 * sites.size() > 1200)
        throw validation_error("gap_probability_block_pfaffian: order above 1200");
    std::vector<int> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw validation_error("gap_probability_block_pfaffian: sites must be distinct");
    for (int s : sorted)
        if (s <= 0) throw validation_error("gap_probability_block_pfaffian: sites must be positive");

    // Doubled space with interleaved per-site components (f_1, g_1, f_2,
    // g_2, ...). Upper triangle of the antisymmetric pairing minus the
    // kernel block; agreement with inclusion-exclusion pins the sign.
    const int n = static_cast<int>(sorted.size());
    SkewMatrix m(2 * n);
    const auto sign = [](long long s) { return s % 2 == 0 ? 1.0 : -1.0; };
    for (int i = 0; i < n; ++i) {
        const int x = sorted[static_cast<std::size_t>(i)];
        // same-site block: delta minus the occupation value
        m.set_upper(2 * i, 2 * i + 1, 1.0 - sign(x) * kernel_K(table, x, -x).value);
        for (int j = i + 1; j < n; ++j) {
            const int y = sorted[static_cast<std::size_t>(j)];
            m.set_upper(2 * i, 2 * j, -kernel_K(table, x, y).value);
            m.set_upper(2 * i, 2 * j + 1, -sign(y) * kernel_K(table, x, -y).value);
            m.set_upper(2 * i + 1, 2 * j, -sign(x) * kernel_K(table, -x, y).value);
            m.set_upper(2 * i + 1, 2 * j + 1, -sign(x + y) * kernel_K(table, -x, -y).value);
        }
    }
    return pfaffian(std::move(m));
}

double gap_probability(const std::vector<int>& sites, const JTable& table) {
    if (sites.empty()) return 1.0;
    if (sites.size() <= 12) return gap_probability_inclusion_exclusion(sites, table);
    return gap_probability_block_pfaffian(sites, table);
}

double gap_probability(const std::vector<int>& sites, const MiwaParams& params) {
    const JTable table(params);
    return gap_probability(sites, table);
}

} // namespace sschur
