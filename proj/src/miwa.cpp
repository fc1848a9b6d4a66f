#include "sschur/miwa.hpp"

#include "sschur/dense.hpp"
#include "sschur/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace sschur {

namespace {

// Kahan-compensated sum of f(n, t_n) over the support.
template <typename F>
double compensated_sum(const std::map<int, double>& coeffs, F&& term) {
    double sum = 0.0, c = 0.0;
    for (const auto& [n, tn] : coeffs) {
        const double y = term(n, tn) - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

} // namespace

MiwaParams::MiwaParams(std::map<int, double> coeffs, std::optional<double> edge)
    : coeffs_(std::move(coeffs)), edge_(edge) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto [n, tn] = *it;
        if (n <= 0 || n % 2 == 0)
            throw validation_error("MiwaParams: indices must be odd positive integers");
        if (!std::isfinite(tn))
            throw validation_error("MiwaParams: coefficients must be finite reals");
        if (tn == 0.0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    if (edge_ && !std::isfinite(*edge_))
        throw validation_error("MiwaParams: edge constant must be finite");
    b_ = 4.0 * compensated_sum(coeffs_, [](int n, double tn) { return n * tn; });
}

MiwaParams MiwaParams::single(double t1) {
    return MiwaParams(std::map<int, double>{{1, t1}});
}

double MiwaParams::coeff(int n) const {
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? 0.0 : it->second;
}

int MiwaParams::max_index() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

MiwaParams MiwaParams::scaled(double factor) const {
    std::map<int, double> scaled_coeffs;
    for (const auto& [n, tn] : coeffs_) scaled_coeffs[n] = tn * factor;
    std::optional<double> scaled_edge;
    if (edge_) scaled_edge = *edge_ * factor;
    return MiwaParams(std::move(scaled_coeffs), scaled_edge);
}

std::string MiwaParams::to_json() const {
    nlohmann::ordered_json out;
    out["t"] = nlohmann::ordered_json::object();
    for (const auto& [n, tn] : coeffs_) out["t"][std::to_string(n)] = tn;
    out["a"] = edge();
    return out.dump();
}

MiwaParams MiwaParams::from_json(const std::string& text) {
    nlohmann::json in;
    try {
        in = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("params JSON: ") + e.what());
    }
    if (!in.contains("t") || !in["t"].is_object())
        throw validation_error("params JSON: missing \"t\" object");
    std::map<int, double> coeffs;
    for (const auto& [key, value] : in["t"].items()) {
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(key, &pos);
        } catch (const std::exception&) {
            throw validation_error("params JSON: non-integer index \"" + key + "\"");
        }
        if (pos != key.size())
            throw validation_error("params JSON: non-integer index \"" + key + "\"");
        coeffs[n] = value.get<double>();
    }
    std::optional<double> edge;
    if (in.contains("a")) edge = in["a"].get<double>();
    return MiwaParams(std::move(coeffs), edge);
}

double phase(const MiwaParams& params, double theta) {
    const double s =
        compensated_sum(params.coeffs(), [theta](int n, double tn) { return tn * std::sin(n * theta); });
    return 4.0 * s - params.edge() * theta;
}

double dispersion(const MiwaParams& params, double theta) {
    const double s =
        compensated_sum(params.coeffs(), [theta](int n, double tn) { return n * tn * std::cos(n * theta); });
    return 4.0 * s;
}

double bulk_angle(const MiwaParams& params, double x) {
    const double b = params.b();
    if (std::abs(x) > b)
        throw validation_error("bulk_angle: |x| exceeds the edge constant b");
    if (x >= b) return 0.0;
    if (x <= -b) return std::numbers::pi;

    // D decreases from b to -b; bisection is immune to the vanishing
    // derivative at the multicritical edge.
    double lo = 0.0, hi = std::numbers::pi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (dispersion(params, mid) > x)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> phase_taylor_coefficients(const MiwaParams& params, int count) {
    // phase(theta) = sum_j (-1)^j theta^(2j+1)/(2j+1)! * [4 sum_n n^(2j+1) t_n]  -  a*theta
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(count));
    double factorial = 1.0; // (2j+1)!
    for (int j = 0; j < count; ++j) {
        const int k = 2 * j + 1;
        if (j > 0) factorial *= static_cast<double>(k - 1) * k;
        const double moment = compensated_sum(
            params.coeffs(), [k](int n, double tn) { return std::pow(static_cast<double>(n), k) * tn; });
        double c = (j % 2 == 0 ? 1.0 : -1.0) * 4.0 * moment / factorial;
        if (j == 0) c -= params.edge();
        coeffs.push_back(c);
    }
    return coeffs;
}

ConditionReport validate(const MiwaParams& params, std::optional<int> p_hint) {
    ConditionReport report;
    report.real_valued = true;   // enforced at construction
    report.finite_support = true;

    // Nondegeneracy: 4 sum n^2 t_n sin(n theta) > 0 on the open interval.
    // Grid scan plus local refinement around the worst point and any
    // sign changes; the margin degenerates like theta^(p-1) at the ends,
    // so only strict negativity fails the check.
    const auto margin_fn = [&params](double theta) {
        double s = 0.0;
        for (const auto& [n, tn] : params.coeffs()) s += n * n * tn * std::sin(n * theta);
        return 4.0 * s;
    };
    // near the interval ends the margin vanishes to high order and the
    // evaluated sum carries rounding of this size; only dips below it count
    double margin_scale = 0.0;
    for (const auto& [n, tn] : params.coeffs()) margin_scale += 4.0 * n * n * std::abs(tn);
    const double rounding_floor = -1e-13 * std::max(1.0, margin_scale);

    const int grid = 10000;
    double worst = std::numeric_limits<double>::infinity();
    double worst_theta = 0.0;
    double prev_theta = 0.0, prev_val = 0.0;
    for (int i = 1; i < grid; ++i) {
        const double theta = std::numbers::pi * static_cast<double>(i) / grid;
        const double val = margin_fn(theta);
        if (val < worst) {
            worst = val;
            worst_theta = theta;
        }
        if (i > 1 && ((prev_val < 0.0) != (val < 0.0))) {
            // refine the bracketed sign change to confirm genuine negativity
            double lo = prev_theta, hi = theta;
            for (int r = 0; r < 60; ++r) {
                const double mid = 0.5 * (lo + hi);
                const double mval = margin_fn(mid);
                if (mval < worst) {
                    worst = mval;
                    worst_theta = mid;
                }
                if ((margin_fn(lo) < 0.0) == (mval < 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
        }
        prev_theta = theta;
        prev_val = val;
    }
    report.nondegenerate = {worst >= rounding_floor && !params.coeffs().empty(), worst_theta,
                            worst};

    // Multicritical order: first nonvanishing odd coefficient beyond the
    // linear one, which must match the -1/(p+1) normalisation.
    const int support = static_cast<int>(params.coeffs().size());
    const int count = std::max({support + 2, p_hint.value_or(0) / 2 + 2, 4});
    report.taylor_coefficients = phase_taylor_coefficients(params, count);

    double scale = 0.0;
    for (const auto& [n, tn] : params.coeffs()) scale = std::max(scale, std::abs(tn));
    const double tol = 1e-9 * std::max(1.0, scale);

    if (std::abs(report.taylor_coefficients[0]) <= tol) {
        for (int j = 1; j < count; ++j) {
            const double c = report.taylor_coefficients[static_cast<std::size_t>(j)];
            if (std::abs(c) <= tol) continue;
            const int p = 2 * j;      // coefficient sits at order p+1
            const double target = -1.0 / (p + 1);
            if (std::abs(c - target) <= 1e-7 * std::max(1.0, std::abs(target)))
                report.multicritical_order = p;
            break;
        }
    }
    return report;
}

MiwaParams solve_minimal_multicritical(int p) {
    if (p < 2 || p % 2 != 0)
        throw validation_error("solve_minimal_multicritical: p must be even and >= 2");

    // Unknowns t_1, t_3, ..., t_{p-1}. Rows: vanishing odd moments
    // sum n^(2j+1) t_n = 0 for j = 1..p/2-1, then the normalisation row
    // 4 sum n^(p+1) t_n = (-1)^(p/2+1) p!.
    const int m = p / 2;
    Matrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    std::vector<double> rhs(static_cast<std::size_t>(m), 0.0);
    for (int row = 0; row < m - 1; ++row) {
        const int k = 2 * (row + 1) + 1;
        for (int col = 0; col < m; ++col) {
            const int n = 2 * col + 1;
            a(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                std::pow(static_cast<double>(n), k);
        }
    }
    double pfact = 1.0;
    for (int i = 2; i <= p; ++i) pfact *= i;
    for (int col = 0; col < m; ++col) {
        const int n = 2 * col + 1;
        a(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(col)) =
            4.0 * std::pow(static_cast<double>(n), p + 1);
    }
    // sign (-1)^(p/2+1)
    rhs[static_cast<std::size_t>(m - 1)] = (m % 2 == 1 ? 1.0 : -1.0) * pfact;

    std::vector<double> t;
    try {
        t = solve(a, rhs);
        // one step of iterative refinement with an extended-precision
        // residual; the moment matrix gets ill-conditioned as p grows and
        // the vanishing conditions should hold to close to full precision
        std::vector<double> residual(static_cast<std::size_t>(m));
        for (int row = 0; row < m; ++row) {
            long double acc = rhs[static_cast<std::size_t>(row)];
            for (int col = 0; col < m; ++col)
                acc -= static_cast<long double>(
                           a(static_cast<std::size_t>(row), static_cast<std::size_t>(col))) *
                       t[static_cast<std::size_t>(col)];
            residual[static_cast<std::size_t>(row)] = static_cast<double>(acc);
        }
        const std::vector<double> correction = solve(a, std::move(residual));
        for (int col = 0; col < m; ++col)
            t[static_cast<std::size_t>(col)] += correction[static_cast<std::size_t>(col)];
    } catch (const validation_error&) {
        throw validation_error("solve_minimal_multicritical: singular Taylor system");
    }

    std::map<int, double> coeffs;
    for (int col = 0; col < m; ++col) coeffs[2 * col + 1] = t[static_cast<std::size_t>(col)];
    MiwaParams params(std::move(coeffs));
    return MiwaParams(params.coeffs(), params.b());
}

} // namespace sschur
