#include "sschur/errors.hpp"
#include "sschur/miwa.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sschur;
using doctest::Approx;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("construction rejects bad coefficient maps") {
    CHECK_THROWS_AS(MiwaParams({{2, 0.5}}), validation_error);
    CHECK_THROWS_AS(MiwaParams({{-1, 0.5}}), validation_error);
    CHECK_THROWS_AS(MiwaParams({{1, std::nan("")}}), validation_error);
    const MiwaParams p({{1, 0.5}, {3, 0.0}}); // zero entries are dropped
    CHECK(p.coeffs().size() == 1);
    CHECK(p.b() == Approx(2.0));
}

TEST_CASE("phase function at the quadratic-minimal point") {
    const MiwaParams p = solve_minimal_multicritical(2);
    CHECK(phase(p, 0.0) == 0.0);
    // direct evaluation; also the cubic leading term
    const double v = phase(p, 0.1);
    CHECK(v == Approx(2.0 * std::sin(0.1) - 0.2).epsilon(1e-15));
    CHECK(v == Approx(-std::pow(0.1, 3) / 3.0).epsilon(1e-3));
    CHECK(phase(p, pi) == Approx(-2.0 * pi).epsilon(1e-14));
}

TEST_CASE("dispersion endpoints and zeros") {
    const MiwaParams p = MiwaParams::single(0.5);
    CHECK(dispersion(p, 0.0) == Approx(2.0));
    CHECK(dispersion(p, pi / 2) == Approx(0.0).scale(1.0).epsilon(1e-14));
    const MiwaParams p4 = solve_minimal_multicritical(4);
    CHECK(dispersion(p4, 0.0) == Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(p4.b() == Approx(8.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("bulk angle inverts the dispersion") {
    const MiwaParams p = MiwaParams::single(0.5);
    CHECK(bulk_angle(p, 2.0) == 0.0);
    CHECK(bulk_angle(p, 0.0) == Approx(pi / 2).epsilon(1e-12));
    CHECK(bulk_angle(p, 1.0) == Approx(pi / 3).epsilon(1e-12));
    CHECK_THROWS_AS(bulk_angle(p, 2.5), validation_error);

    for (const MiwaParams& params :
         {MiwaParams::single(0.5), solve_minimal_multicritical(4), solve_minimal_multicritical(6)}) {
        const double b = params.b();
        for (int i = 0; i <= 20; ++i) {
            const double x = -b + 2.0 * b * i / 20.0;
            CHECK(dispersion(params, bulk_angle(params, x)) == Approx(x).scale(1.0).epsilon(1e-10));
        }
        for (int i = 0; i <= 20; ++i) {
            const double theta = pi * i / 20.0;
            CHECK(bulk_angle(params, dispersion(params, theta)) ==
                  Approx(theta).scale(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("dispersion decreases on the half period when nondegenerate") {
    for (const MiwaParams& params :
         {MiwaParams::single(0.5), solve_minimal_multicritical(4), solve_minimal_multicritical(6)}) {
        REQUIRE(validate(params).nondegenerate.ok);
        // fine grid: nonincreasing (the curve flattens below double
        // resolution at both ends for higher orders)
        double prev = dispersion(params, 0.0);
        for (int i = 1; i <= 10000; ++i) {
            const double cur = dispersion(params, pi * i / 10000.0);
            CHECK(cur <= prev + 1e-13);
            prev = cur;
        }
        // coarse grid: strict decrease is resolvable
        prev = dispersion(params, 0.0);
        for (int i = 1; i <= 100; ++i) {
            const double cur = dispersion(params, pi * i / 100.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("validate detects orders and rejects the sign flip") {
    const ConditionReport r2 = validate(MiwaParams::single(0.5));
    CHECK(r2.real_valued);
    CHECK(r2.finite_support);
    CHECK(r2.nondegenerate.ok);
    REQUIRE(r2.multicritical_order.has_value());
    CHECK(*r2.multicritical_order == 2);

    const ConditionReport r4 = validate(MiwaParams({{1, 0.75}, {3, -1.0 / 36.0}}));
    CHECK(r4.nondegenerate.ok);
    REQUIRE(r4.multicritical_order.has_value());
    CHECK(*r4.multicritical_order == 4);

    const ConditionReport flipped = validate(MiwaParams::single(-0.5));
    CHECK_FALSE(flipped.nondegenerate.ok);
}

TEST_CASE("quartic-minimal margin reduces to the cubed sine") {
    const MiwaParams p4 = solve_minimal_multicritical(4);
    for (double theta : {0.3, 1.0, 2.0, 2.9}) {
        double margin = 0.0;
        for (const auto& [n, tn] : p4.coeffs()) margin += n * n * tn * std::sin(n * theta);
        margin *= 4.0;
        CHECK(margin == Approx(4.0 * std::pow(std::sin(theta), 3)).epsilon(1e-12));
    }
}

TEST_CASE("minimal families solve the vanishing conditions") {
    const MiwaParams p2 = solve_minimal_multicritical(2);
    CHECK(p2.coeff(1) == Approx(0.5).epsilon(1e-14));
    CHECK(p2.edge() == Approx(2.0).epsilon(1e-14));

    const MiwaParams p4 = solve_minimal_multicritical(4);
    CHECK(p4.coeff(1) == Approx(0.75).epsilon(1e-13));
    CHECK(p4.coeff(3) == Approx(-1.0 / 36.0).epsilon(1e-13));
    CHECK(p4.edge() == Approx(8.0 / 3.0).epsilon(1e-13));

    // solved by hand from the three-term elimination
    const MiwaParams p6 = solve_minimal_multicritical(6);
    CHECK(p6.coeff(1) == Approx(15.0 / 16.0).epsilon(1e-12));
    CHECK(p6.coeff(3) == Approx(-5.0 / 96.0).epsilon(1e-12));
    CHECK(p6.coeff(5) == Approx(3.0 / 800.0).epsilon(1e-12));
    CHECK(p6.edge() == Approx(16.0 / 5.0).epsilon(1e-12));
    const ConditionReport r6 = validate(p6);
    REQUIRE(r6.multicritical_order.has_value());
    CHECK(*r6.multicritical_order == 6);

    CHECK_THROWS_AS(solve_minimal_multicritical(3), validation_error);
    CHECK_THROWS_AS(solve_minimal_multicritical(0), validation_error);
}

TEST_CASE("higher-order families match exact rational elimination") {
    // frozen from an exact solve of the same moment system over rationals
    const MiwaParams p8 = solve_minimal_multicritical(8);
    CHECK(p8.coeff(1) == Approx(35.0 / 32.0).epsilon(1e-12));
    CHECK(p8.coeff(3) == Approx(-7.0 / 96.0).epsilon(1e-12));
    CHECK(p8.coeff(5) == Approx(7.0 / 800.0).epsilon(1e-12));
    CHECK(p8.coeff(7) == Approx(-1.0 / 1568.0).epsilon(1e-12));
    CHECK(p8.edge() == Approx(128.0 / 35.0).epsilon(1e-12));
    const ConditionReport r8 = validate(p8);
    CHECK(r8.nondegenerate.ok);
    CHECK(r8.multicritical_order == 8);

    const MiwaParams p10 = solve_minimal_multicritical(10);
    CHECK(p10.coeff(1) == Approx(315.0 / 256.0).epsilon(1e-11));
    CHECK(p10.coeff(9) == Approx(5.0 / 41472.0).epsilon(1e-9));
    CHECK(p10.edge() == Approx(256.0 / 63.0).epsilon(1e-11));
    const ConditionReport r10 = validate(p10);
    CHECK(r10.nondegenerate.ok); // margin dips to rounding level near the ends
    CHECK(r10.multicritical_order == 10);
}

TEST_CASE("phase vanishes to the advertised order") {
    for (int p : {2, 4, 6}) {
        const MiwaParams params = solve_minimal_multicritical(p);
        CHECK(params.edge() == Approx(params.b()).epsilon(1e-13));

        // fit the next-order constant at two points, verify at ten more
        const auto excess = [&](double theta) {
            return std::abs(phase(params, theta) + std::pow(theta, p + 1) / (p + 1));
        };
        double c_fit = 0.0;
        for (double theta : {0.2, 0.3})
            c_fit = std::max(c_fit, excess(theta) / std::pow(theta, p + 3));
        for (int i = 1; i <= 10; ++i) {
            const double theta = 0.3 * i / 10.0;
            CHECK(excess(theta) <= 1.05 * c_fit * std::pow(theta, p + 3) + 1e-15);
        }
    }
}

TEST_CASE("json round trip keeps exact values") {
    const MiwaParams p4 = solve_minimal_multicritical(4);
    const MiwaParams back = MiwaParams::from_json(p4.to_json());
    CHECK(back.coeff(1) == p4.coeff(1)); // bitwise
    CHECK(back.coeff(3) == p4.coeff(3));
    CHECK(back.edge() == p4.edge());

    const MiwaParams parsed = MiwaParams::from_json(R"({"t": {"1": 0.5}, "a": 2.0})");
    CHECK(parsed.coeff(1) == 0.5);
    CHECK(parsed.edge() == 2.0);
    CHECK_THROWS_AS(MiwaParams::from_json("{}"), validation_error);
    CHECK_THROWS_AS(MiwaParams::from_json(R"({"t": {"x": 1.0}})"), validation_error);
}

TEST_CASE("scaling multiplies coefficients and the edge") {
    const MiwaParams p = solve_minimal_multicritical(2).scaled(8.0);
    CHECK(p.coeff(1) == Approx(4.0));
    CHECK(p.edge() == Approx(16.0));
    CHECK(p.b() == Approx(16.0));
}
