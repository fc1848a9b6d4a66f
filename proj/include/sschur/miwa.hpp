#ifndef SSCHUR_MIWA_HPP
#define SSCHUR_MIWA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sschur {

/// Real coefficients t_n supported on finitely many odd positive indices,
/// the parameter set of the measure. Carries the derived right-edge
/// constant b = 4 * sum n*t_n and, optionally, the user-pinned edge
/// constant a (equal to b for multicritical parameter sets).
class MiwaParams {
public:
    MiwaParams() = default;
    explicit MiwaParams(std::map<int, double> coeffs,
                        std::optional<double> edge = std::nullopt);

    /// Single-coefficient family t_1 = value.
    static MiwaParams single(double t1);

    const std::map<int, double>& coeffs() const { return coeffs_; }
    double coeff(int n) const;
    int max_index() const;

    double b() const { return b_; }
    bool has_edge() const { return edge_.has_value(); }
    /// Edge constant a; defaults to b, which is forced whenever the phase
    /// function is stationary at the origin.
    double edge() const { return edge_.value_or(b_); }

    /// Every coefficient (and the edge, if set) multiplied by factor.
    MiwaParams scaled(double factor) const;

    std::string to_json() const;
    static MiwaParams from_json(const std::string& text);

private:
    std::map<int, double> coeffs_;
    double b_ = 0.0;
    std::optional<double> edge_;
};

struct NondegeneracyResult {
    bool ok = false;
    double worst_theta = 0.0; // grid location of the smallest margin
    double margin = 0.0;      // min of 4*sum n^2 t_n sin(n theta) over the grid
};

struct ConditionReport {
    bool real_valued = false;
    bool finite_support = false;
    NondegeneracyResult nondegenerate;
    std::optional<int> multicritical_order;
    /// Odd Taylor coefficients of the phase function, orders 1, 3, 5, ...
    std::vector<double> taylor_coefficients;
};

/// Phase function 4 * sum t_n sin(n theta) - a*theta of the oscillatory
/// integrals; vanishes to order p at the origin for p-multicritical params.
double phase(const MiwaParams& params, double theta);

/// Dispersion D(theta) = 4 * sum n t_n cos(n theta); D(0) = b, D(pi) = -b,
/// strictly decreasing on [0, pi] under nondegeneracy.
double dispersion(const MiwaParams& params, double theta);

/// Inverse of the dispersion: the unique angle in [0, pi] with
/// dispersion(angle) == x. Requires |x| <= b. Bisection to 1e-12.
double bulk_angle(const MiwaParams& params, double x);

/// Odd Taylor coefficients of the phase function at 0 (orders 1,3,...,2*count-1),
/// computed exactly from the finite sums with compensated accumulation.
std::vector<double> phase_taylor_coefficients(const MiwaParams& params, int count);

/// Checks the admissibility conditions and detects the multicritical order.
ConditionReport validate(const MiwaParams& params,
                         std::optional<int> p_hint = std::nullopt);

/// Minimal p-multicritical parameter set: t_1, ..., t_{p-1} solving the
/// vanishing conditions with the leading coefficient pinned to -1/(p+1),
/// all higher coefficients zero. p must be even and >= 2.
MiwaParams solve_minimal_multicritical(int p);

} // namespace sschur

#endif
