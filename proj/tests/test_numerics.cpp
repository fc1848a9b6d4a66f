#include "sschur/dense.hpp"
#include "sschur/errors.hpp"
#include "sschur/fft.hpp"
#include "sschur/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace sschur;

TEST_CASE("fft matches a direct transform") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const std::size_t n = 64;
    std::vector<std::complex<double>> data(n);
    for (auto& v : data) v = {dist(rng), dist(rng)};

    std::vector<std::complex<double>> direct(n, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(j * k % n) / n;
            direct[k] += data[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }

    std::vector<std::complex<double>> fast = data;
    fft_forward(fast);
    for (std::size_t k = 0; k < n; ++k)
        CHECK(std::abs(fast[k] - direct[k]) < 1e-12);
}

TEST_CASE("fft rejects non-power-of-two input") {
    std::vector<std::complex<double>> data(6);
    CHECK_THROWS_AS(fft_forward(data), validation_error);
    CHECK(next_pow2(6) == 8);
    CHECK(next_pow2(8) == 8);
    CHECK(next_pow2(1) == 1);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    for (int n : {2, 5, 16, 64}) {
        const QuadratureRule rule = gauss_legendre(n);
        // exact through degree 2n-1; check sum of weights and odd/even moments
        for (int deg = 0; deg < 2 * n && deg <= 12; ++deg) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], deg);
            const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("gauss-legendre reproduces the textbook two-point rule") {
    const QuadratureRule rule = gauss_legendre(2);
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("clenshaw-curtis integrates polynomials exactly") {
    for (int n : {4, 8, 17, 32}) {
        const QuadratureRule rule = clenshaw_curtis(n);
        CHECK(rule.nodes.size() == static_cast<std::size_t>(n) + 1);
        for (double w : rule.weights) CHECK(w > 0.0);
        for (int deg = 0; deg <= n && deg <= 10; ++deg) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], deg);
            const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("interval mapping preserves totals") {
    const QuadratureRule rule = map_to_interval(gauss_legendre(8), 1.0, 4.0);
    double len = 0.0, quad = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        len += rule.weights[i];
        quad += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(len == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(quad == doctest::Approx(21.0).epsilon(1e-14)); // integral of x^2 on [1,4]
}

TEST_CASE("dense determinant and solve") {
    Matrix a(3, 3);
    a(0, 0) = 2;  a(0, 1) = 1;  a(0, 2) = -1;
    a(1, 0) = -3; a(1, 1) = -1; a(1, 2) = 2;
    a(2, 0) = -2; a(2, 1) = 1;  a(2, 2) = 2;
    CHECK(determinant(a) == doctest::Approx(-1.0).epsilon(1e-12));

    const std::vector<double> x = solve(a, {8.0, -11.0, -3.0});
    CHECK(x[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(x[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(x[2] == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK(determinant(Matrix(0, 0)) == 1.0);
    Matrix singular(2, 2);
    singular(0, 0) = 1.0;
    singular(1, 0) = 2.0; // second column zero
    CHECK(determinant(singular) == 0.0);
    CHECK_THROWS_AS(solve(singular, {1.0, 1.0}), validation_error);
}
