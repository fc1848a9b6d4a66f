#include "oracles.hpp"

#include "sschur/dense.hpp"
#include "sschur/errors.hpp"
#include "sschur/limit_shape.hpp"
#include "sschur/miwa.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sschur;
using doctest::Approx;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("closed-form values of the quadratic-minimal shape") {
    const MiwaParams params = MiwaParams::single(0.5);
    CHECK(limit_shape(params, 0.0) == Approx(4.0 / pi).epsilon(1e-12));
    CHECK(limit_shape(params, 1.0) ==
          Approx(1.0 + 2.0 / pi * (std::sqrt(3.0) - pi / 3.0)).epsilon(1e-12));
    CHECK(limit_shape(params, 2.0) == 2.0);
    CHECK(limit_shape(params, 3.7) == 3.7);
    CHECK_THROWS_AS(limit_shape(params, -0.1), validation_error);

    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double x = 2.0 * i / 49.0;
        worst = std::max(worst, std::abs(limit_shape(params, x) - oracles::lsvk_curve(x)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("density values and boundaries") {
    const MiwaParams params = MiwaParams::single(0.5);
    CHECK(density(params, 0.0) == Approx(0.5).epsilon(1e-12));
    CHECK(density(params, 2.0) == 0.0);
    CHECK(density(params, 5.0) == 0.0);

    const MiwaParams p4 = solve_minimal_multicritical(4);
    const double rho0 = density(p4, 0.0);
    CHECK(dispersion(p4, rho0 * pi) == Approx(0.0).scale(1.0).epsilon(1e-10));
    for (double x = 0.0; x < p4.b(); x += 0.2) {
        const double value = density(p4, x);
        CHECK(value >= 0.0);
        CHECK(value <= 1.0);
    }
}

TEST_CASE("shape derivative equals one minus twice the density") {
    for (const MiwaParams& params :
         {MiwaParams::single(0.5), solve_minimal_multicritical(4)}) {
        const double b = params.b();
        const double h = 1e-5;
        for (int i = 1; i < 10; ++i) {
            const double x = b * i / 10.0;
            const double slope =
                (limit_shape(params, x + h) - limit_shape(params, x - h)) / (2.0 * h);
            CHECK(slope == Approx(1.0 - 2.0 * density(params, x)).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("finite-mesh expected profile approaches the shape") {
    const MiwaParams params = MiwaParams::single(0.5);

    // far beyond the edge nothing is occupied
    CHECK(expected_profile(params, 0.25, 8.0) == Approx(8.0).epsilon(1e-10));

    // independently computed finite-mesh value: error 0.0618 at mesh 1/8,
    // halving with each mesh refinement
    CHECK(std::abs(expected_profile(params, 0.125, 0.0) - 4.0 / pi) < 0.07);

    double previous = 1e9;
    for (double eps : {0.25, 0.125, 0.0625}) {
        const double err = std::abs(expected_profile(params, eps, 1.0) - limit_shape(params, 1.0));
        CHECK(err < previous);
        previous = err;
    }
    CHECK_THROWS_AS(expected_profile(params, 0.0, 1.0), validation_error);
}

TEST_CASE("bulk kernel diagonal and decay") {
    const MiwaParams params = MiwaParams::single(0.5);
    CHECK(sine_kernel(params, 0.7, 4, 4) == Approx(density(params, 0.7)).epsilon(1e-12));
    CHECK(sine_kernel(params, 0.0, 1, 0) == Approx(1.0 / pi).epsilon(1e-12));
    CHECK(sine_kernel(params, 2.0, 3, 1) == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(sine_kernel(params, 0.9, 2, 5) == Approx(sine_kernel(params, 0.9, 5, 2)).epsilon(1e-14));

    // determinants over a small window stay in the probability range
    for (double x : {0.3, 0.7, 1.5}) {
        Matrix m(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int s = 0; s < 5; ++s) m(r, s) = sine_kernel(params, x, r, s);
        const double det = determinant(std::move(m));
        CHECK(det >= -1e-12);
        CHECK(det <= 1.0 + 1e-12);
    }
}

TEST_CASE("curve generation covers the grid deterministically") {
    const MiwaParams params = MiwaParams::single(0.5);
    const ShapeCurve curve = shape_curve(params, 8, 2.0);
    REQUIRE(curve.x.size() == 9);
    CHECK(curve.x.front() == 0.0);
    CHECK(curve.x.back() == Approx(2.0));
    CHECK(curve.omega.front() == Approx(4.0 / pi).epsilon(1e-12));
    CHECK(curve.density.front() == Approx(0.5).epsilon(1e-12));
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
        CHECK(curve.omega[i] >= curve.x[i] - 1e-12);
        if (i > 0) CHECK(curve.density[i] <= curve.density[i - 1] + 1e-12);
    }
    const ShapeCurve again = shape_curve(params, 8, 2.0);
    CHECK(curve.omega == again.omega); // bitwise reproducible
}
