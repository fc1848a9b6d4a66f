#ifndef SSCHUR_CHECKS_ORACLES_HPP
#define SSCHUR_CHECKS_ORACLES_HPP

#include "sschur/skew_linalg.hpp"

#include <vector>

// Independent reference implementations used only by tests and the
// verification suite. None of these call the code paths they certify.
namespace sschur::oracles {

/// Bessel function of the first kind, integer order, by Miller's downward
/// recurrence with sum normalisation. Requires x >= 0.
double bessel_j(int order, double x);

/// Classical Airy function by its Maclaurin series; trustworthy for
/// |x| <= 8 or so, which covers every use here.
double airy_series(double x);
double airy_series_derivative(double x);

/// Pfaffian by recursive expansion along the first row; exponential cost,
/// fine for the small orders used in cross-checks.
double pfaffian_recursive(const SkewMatrix& m);

/// Degree-p Airy function straight from its oscillatory cosine integral
/// on [0, T] plus a two-term integration-by-parts tail.
double airy_oscillatory(int p, double x, double cutoff);

/// Limit shape of the single-coefficient measure at t_1 = 1/2 in closed
/// form (the classical rounded-staircase curve).
double lsvk_curve(double x);

} // namespace sschur::oracles

#endif
