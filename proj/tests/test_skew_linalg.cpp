#include "oracles.hpp"

#include "sschur/dense.hpp"
#include "sschur/errors.hpp"
#include "sschur/schur_q.hpp"
#include "sschur/skew_linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace sschur;
using doctest::Approx;

namespace {

SkewMatrix random_skew(int order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SkewMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j) m.set_upper(i, j, dist(rng));
    return m;
}

} // namespace

TEST_CASE("pfaffian base cases") {
    CHECK(pfaffian(SkewMatrix(0)) == 1.0);

    SkewMatrix two(2);
    two.set_upper(0, 1, 3.25);
    CHECK(pfaffian(two) == Approx(3.25).epsilon(1e-15));

    CHECK(pfaffian(SkewMatrix(4)) == 0.0); // structurally singular

    // textbook 4x4 expansion on random entries
    const SkewMatrix m = random_skew(4, 99);
    const double expected = m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) +
                            m.at(0, 3) * m.at(1, 2);
    CHECK(pfaffian(m) == Approx(expected).epsilon(1e-14));
}

TEST_CASE("pfaffian agrees with recursive expansion") {
    for (int order : {2, 4, 6, 8})
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            const SkewMatrix m = random_skew(order, seed);
            CHECK(pfaffian(m) ==
                  Approx(oracles::pfaffian_recursive(m)).epsilon(1e-12).scale(1.0));
        }
}

TEST_CASE("pfaffian squared equals the determinant") {
    for (int order : {2, 6, 12, 20, 40}) {
        const SkewMatrix m = random_skew(order, 7000 + static_cast<std::uint64_t>(order));
        Matrix dense(static_cast<std::size_t>(order), static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) dense(i, j) = m.at(i, j);
        const double pf = pfaffian(m);
        CHECK(pf * pf == Approx(determinant(dense)).epsilon(1e-9));
    }
}

TEST_CASE("permutation congruence flips the sign of the pfaffian") {
    const SkewMatrix m = random_skew(6, 321);
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 6; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        // permutation sign by counting inversions
        int inversions = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (perm[i] > perm[j]) ++inversions;
        SkewMatrix permuted(6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                permuted.set_upper(i, j, m.at(perm[i], perm[j]));
        const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
        CHECK(pfaffian(permuted) == Approx(sign * pfaffian(m)).epsilon(1e-12));
    }
}

TEST_CASE("correlation matrix structure") {
    const JTable table(MiwaParams::single(0.5));

    const SkewMatrix empty = correlation_matrix({}, table);
    CHECK(empty.order() == 0);

    const SkewMatrix single = correlation_matrix({3}, table);
    CHECK(single.order() == 2);
    CHECK(single.at(0, 1) == Approx(-kernel_K(table, 3, -3).value).epsilon(1e-14));
    CHECK(single.at(0, 1) == Approx(one_point(table, 3)).epsilon(1e-12).scale(1.0));

    CHECK_THROWS_AS(correlation_matrix({2, 2}, table), validation_error);
    CHECK_THROWS_AS(correlation_matrix({0}, table), validation_error);
}

TEST_CASE("correlations match the enumeration bracket") {
    const MiwaParams params = MiwaParams::single(0.5);
    const JTable table(params);

    CHECK(correlation({}, table).value == 1.0);

    const CorrelationResult one = correlation({1}, table);
    const Interval bracket1 = oracle_correlation({1}, params, 30);
    CHECK(bracket1.upper - bracket1.lower < 1e-10);
    CHECK(one.value >= bracket1.lower - 1e-10);
    CHECK(one.value <= bracket1.upper + 1e-10);
    CHECK(one.value == Approx(0.3086).epsilon(2e-3));

    const CorrelationResult pair = correlation({1, 2}, table);
    const Interval bracket12 = oracle_correlation({1, 2}, params, 34);
    CHECK(bracket12.upper - bracket12.lower < 1e-9);
    CHECK(pair.value >= bracket12.lower - 1e-9);
    CHECK(pair.value <= bracket12.upper + 1e-9);
}

TEST_CASE("correlations shrink as the site set grows") {
    const JTable table(MiwaParams::single(0.5));
    const std::vector<std::vector<int>> chain = {
        {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}};
    double previous = 1.0;
    for (const auto& sites : chain) {
        const double value = correlation(sites, table).value;
        CHECK(value <= previous + 1e-12);
        CHECK(value >= -1e-12);
        previous = value;
    }
}

TEST_CASE("gap probabilities by both routes and against enumeration") {
    const MiwaParams params = MiwaParams::single(0.5);
    const JTable table(params);

    CHECK(gap_probability({}, table) == 1.0);
    CHECK(gap_probability({1}, table) ==
          Approx(1.0 - one_point(table, 1)).epsilon(1e-11));

    for (unsigned mask = 1; mask < (1u << 6); ++mask) {
        if (std::popcount(mask) > 3) continue;
        std::vector<int> sites;
        for (int s = 1; s <= 6; ++s)
            if (mask & (1u << (s - 1))) sites.push_back(s);
        CHECK(gap_probability_inclusion_exclusion(sites, table) ==
              Approx(gap_probability_block_pfaffian(sites, table)).epsilon(1e-10).scale(1.0));
    }

    // direct enumeration of configurations avoiding {1,2,3}
    const double z = partition_function(params);
    const QSeries series(params, 32);
    double avoiding = 0.0, total = 0.0;
    for_each_strict(30, [&](const StrictPartition& lambda) {
        const double w = measure_weight(lambda, series);
        total += w;
        if (!lambda.contains(1) && !lambda.contains(2) && !lambda.contains(3)) avoiding += w;
    });
    const double tail = 1.0 - total / z;
    const double gap123 = gap_probability({1, 2, 3}, table);
    CHECK(gap123 >= avoiding / z - 1e-10);
    CHECK(gap123 <= avoiding / z + tail + 1e-10);
}

TEST_CASE("signed subset sums stay inside the probability range") {
    const JTable table(MiwaParams::single(0.5));
    // window {1..5}: alternating sum over subsets is the gap probability
    double sum = 0.0;
    for (unsigned mask = 0; mask < (1u << 5); ++mask) {
        std::vector<int> sites;
        for (int s = 1; s <= 5; ++s)
            if (mask & (1u << (s - 1))) sites.push_back(s);
        const double rho = correlation(sites, table).value;
        sum += (std::popcount(mask) % 2 == 0 ? rho : -rho);
    }
    CHECK(sum >= 0.0);
    CHECK(sum <= 1.0);
}

TEST_CASE("block pfaffian guards its size cap") {
    const JTable table(MiwaParams::single(0.5));
    std::vector<int> too_many(601);
    std::iota(too_many.begin(), too_many.end(), 1);
    CHECK_THROWS_AS(gap_probability_block_pfaffian(too_many, table), validation_error);
}
