#include "sschur/scaling_lab.hpp"

#include "sschur/dense.hpp"
#include "sschur/errors.hpp"
#include "sschur/fermion_kernel.hpp"
#include "sschur/higher_airy.hpp"
#include "sschur/skew_linalg.hpp"
#include "sschur/tracy_widom.hpp"

#include <algorithm>
#include <cmath>

namespace sschur {

namespace {

// floor with a nudge so lattice values that land a few ulps below an
// integer are not pushed down a site
long long floor_snapped(double v) { return static_cast<long long>(std::floor(v + 1e-9)); }

double sign_of(long long m) { return m % 2 == 0 ? 1.0 : -1.0; }

struct EdgeContext {
    MiwaParams scaled;
    double edge_index; // a / eps^(p+1)
    JTable table;
};

EdgeContext make_edge_context(int p, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw validation_error("edge scaling: epsilon must lie in (0, 1)");
    const MiwaParams base = solve_minimal_multicritical(p);
    const double factor = std::pow(1.0 / epsilon, p + 1);
    MiwaParams scaled = base.scaled(factor);
    const double nodes = 4.0 * static_cast<double>(bandwidth_estimate(scaled)) + 64.0;
    if (nodes > 1e7)
        throw validation_error("edge scaling: estimated quadrature nodes exceed the 1e7 guard");
    const double edge_index = base.edge() * factor;
    return {scaled, edge_index, JTable(scaled)};
}

} // namespace

double edge_j(int p, double x, double epsilon) {
    const EdgeContext ctx = make_edge_context(p, epsilon);
    const long long m = floor_snapped(ctx.edge_index + x / epsilon);
    return ctx.table.j(m) / epsilon;
}

EdgeKernelBlocks edge_kernel(int p, double x, double y, double epsilon) {
    const EdgeContext ctx = make_edge_context(p, epsilon);
    const long long mx = floor_snapped(ctx.edge_index + x / epsilon);
    const long long my = floor_snapped(ctx.edge_index + y / epsilon);
    EdgeKernelBlocks blocks;
    blocks.plus_plus = kernel_K(ctx.table, mx, my).value / epsilon;
    blocks.plus_minus = sign_of(my) * kernel_K(ctx.table, mx, -my).value / epsilon;
    blocks.minus_minus = sign_of(mx + my) * kernel_K(ctx.table, -mx, -my).value / epsilon;
    return blocks;
}

PfDetPair pfaffian_to_determinant_check(int p, const std::vector<double>& points,
                                        double epsilon) {
    if (points.size() > 4)
        throw validation_error("pfaffian_to_determinant_check: at most 4 points");
    PfDetPair pair;
    if (points.empty()) {
        pair.scaled_pfaffian = 1.0;
        pair.limit_determinant = 1.0;
        return pair;
    }

    const EdgeContext ctx = make_edge_context(p, epsilon);
    std::vector<int> sites;
    for (double k : points)
        sites.push_back(static_cast<int>(floor_snapped(ctx.edge_index + k / epsilon)));
    std::vector<int> dedup = sites;
    std::sort(dedup.begin(), dedup.end());
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end())
        throw validation_error("pfaffian_to_determinant_check: points collide on the lattice");

    const double n = static_cast<double>(points.size());
    pair.scaled_pfaffian = correlation(sites, ctx.table).value / std::pow(epsilon, n);

    Matrix limit(points.size(), points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            limit(i, j) = airy_kernel(p, points[i], points[j]);
    pair.limit_determinant = determinant(std::move(limit));
    return pair;
}

double largest_part_law(int p, double s, double epsilon) {
    const EdgeContext ctx = make_edge_context(p, epsilon);
    const long long threshold = floor_snapped(ctx.edge_index + s / epsilon);
    if (threshold < 0) return 0.0; // parts are positive; a negative cap is unreachable

    // interval of sites that must stay empty: everything above the
    // threshold until the one-point mass is negligible
    long long cutoff = threshold;
    const long long hard_top = ctx.table.max_index() + 1;
    for (long long m = std::max<long long>(threshold + 1, 1); m <= hard_top; ++m) {
        if (one_point(ctx.table, m) >= 1e-14)
            cutoff = m;
    }
    if (cutoff <= threshold) return 1.0;

    std::vector<int> interval;
    for (long long m = threshold + 1; m <= cutoff; ++m)
        interval.push_back(static_cast<int>(m));
    if (2 * interval.size() > 1200)
        throw validation_error("largest_part_law: doubled interval exceeds order 1200");
    return gap_probability(interval, ctx.table);
}

double bulk_kernel(const MiwaParams& params, double x, long long r, long long s,
                   double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw validation_error("bulk_kernel: epsilon must lie in (0, 1)");
    // x beyond the edge is allowed; the kernel simply fades to zero there
    if (x <= 0.0) throw validation_error("bulk_kernel: x must be positive");
    const MiwaParams scaled = params.scaled(1.0 / epsilon);
    const JTable table(scaled);
    const long long m = floor_snapped(x / epsilon);
    return sign_of(m + s) * kernel_K(table, m + r, -(m + s)).value;
}

ScalingReport edge_j_report(int p, std::vector<double> eps_list, std::vector<double> args) {
    std::sort(eps_list.rbegin(), eps_list.rend());
    std::sort(args.begin(), args.end());
    AiryEvaluator eval(p);

    ScalingReport report{"j", p, {}};
    for (double eps : eps_list) {
        const EdgeContext ctx = make_edge_context(p, eps);
        for (double x : args) {
            const long long m = floor_snapped(ctx.edge_index + x / eps);
            const double finite = ctx.table.j(m) / eps;
            const double limit = eval(x);
            report.rows.push_back({eps, {x}, finite, limit, std::abs(finite - limit)});
        }
    }
    return report;
}

ScalingReport edge_kernel_report(int p, std::vector<double> eps_list, std::vector<double> args) {
    std::sort(eps_list.rbegin(), eps_list.rend());
    std::sort(args.begin(), args.end());

    ScalingReport report{"kernel", p, {}};
    for (double eps : eps_list) {
        const EdgeContext ctx = make_edge_context(p, eps);
        for (double x : args) {
            const long long m = floor_snapped(ctx.edge_index + x / eps);
            const double finite = sign_of(m) * kernel_K(ctx.table, m, -m).value / eps;
            const double limit = airy_kernel(p, x, x);
            report.rows.push_back({eps, {x, x}, finite, limit, std::abs(finite - limit)});
        }
    }
    return report;
}

ScalingReport pfdet_report(int p, std::vector<double> eps_list, std::vector<double> points) {
    std::sort(eps_list.rbegin(), eps_list.rend());
    ScalingReport report{"pfdet", p, {}};
    for (double eps : eps_list) {
        const PfDetPair pair = pfaffian_to_determinant_check(p, points, eps);
        report.rows.push_back({eps, points, pair.scaled_pfaffian, pair.limit_determinant,
                               std::abs(pair.scaled_pfaffian - pair.limit_determinant)});
    }
    return report;
}

ScalingReport largest_part_report(int p, std::vector<double> eps_list, std::vector<double> args) {
    std::sort(eps_list.rbegin(), eps_list.rend());
    std::sort(args.begin(), args.end());
    ScalingReport report{"tw", p, {}};
    std::vector<double> limits(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) limits[i] = tw_cdf(p, args[i]);
    for (double eps : eps_list) {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const double finite = largest_part_law(p, args[i], eps);
            report.rows.push_back(
                {eps, {args[i]}, finite, limits[i], std::abs(finite - limits[i])});
        }
    }
    return report;
}

} // namespace sschur
