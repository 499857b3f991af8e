#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "tda/nhst.hpp"
#include "tda/rng.hpp"

using namespace tda;

namespace {

DistanceMatrix random_distance_matrix(Rng& rng, std::size_t n, double scale = 1.0) {
    DistanceMatrix d;
    d.n = n;
    d.entries.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = rng.next_unit_open() * scale;
            d.at(i, j) = v;
            d.at(j, i) = v;
        }
    }
    return d;
}

DistanceMatrix constant_distance_matrix(std::size_t n, double value) {
    DistanceMatrix d;
    d.n = n;
    d.entries.assign(n * n, value);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = 0.0;
    return d;
}

// Loss evaluated exactly as written: ordered double sum with the
// 1/(2 n (n-1)) prefactor per group.
double naive_joint_loss(const DistanceMatrix& d, const Labeling& labeling) {
    double loss = 0.0;
    for (const auto& group : labeling.groups) {
        const double n = static_cast<double>(group.size());
        double acc = 0.0;
        for (const int i : group) {
            for (const int j : group) {
                acc += d.at(i, j) * d.at(i, j);
            }
        }
        loss += acc / (2.0 * n * (n - 1.0));
    }
    return loss;
}

} // namespace

TEST_CASE("within_group_variance") {
    const std::vector<double> simple{1.0, 2.0, 3.0};
    CHECK(within_group_variance(simple) == 1.0);

    const std::vector<double> constant(17, 4.25);
    CHECK(within_group_variance(constant) == 0.0);

    const std::vector<double> two{1.0, 2.0};
    CHECK(within_group_variance(two) == 0.5);

    CHECK_THROWS_AS(within_group_variance(std::vector<double>{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(within_group_variance(std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("pairwise variance equals the mean-based estimator") {
    Rng rng(112233);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.next_below(49);
        std::vector<double> values(n);
        for (auto& v : values) v = (rng.next_unit() - 0.5) * 2.0;
        const double fast = within_group_variance(values);
        const double slow = oracle::mean_based_variance(values);
        CHECK(std::abs(fast - slow) <= 1e-12);
    }
}

TEST_CASE("labeling validation") {
    CHECK_THROWS_AS(validate_labeling({{{0, 1, 2, 3}}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_labeling({{{0, 1}, {2}}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_labeling({{{0, 1}, {1, 2}}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(validate_labeling({{{0, 1}, {2, 5}}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(validate_labeling({{{0, 1}, {2, 3}}}, 5), std::invalid_argument);
    CHECK_NOTHROW(validate_labeling({{{0, 2}, {1, 3}}}, 4));
    CHECK_NOTHROW(validate_labeling(two_group_labeling(2, 3), 5));
}

TEST_CASE("joint loss") {
    SUBCASE("all-zero distances give zero loss") {
        const auto d = constant_distance_matrix(6, 0.0);
        CHECK(joint_loss(d, two_group_labeling(3, 3)) == 0.0);
    }
    SUBCASE("two groups of two: a^2/2 + b^2/2") {
        DistanceMatrix d;
        d.n = 4;
        d.entries.assign(16, 0.0);
        const double a = 3.0, b = 5.0;
        d.at(0, 1) = d.at(1, 0) = a;
        d.at(2, 3) = d.at(3, 2) = b;
        d.at(0, 2) = d.at(2, 0) = 11.0;
        d.at(0, 3) = d.at(3, 0) = 12.0;
        d.at(1, 2) = d.at(2, 1) = 13.0;
        d.at(1, 3) = d.at(3, 1) = 14.0;
        CHECK(joint_loss(d, two_group_labeling(2, 2)) == a * a / 2.0 + b * b / 2.0);
    }
    SUBCASE("random matrices match a direct double-sum evaluation") {
        Rng rng(44);
        for (int trial = 0; trial < 30; ++trial) {
            const auto d = random_distance_matrix(rng, 8);
            Labeling labeling;
            std::vector<int> indices(8);
            std::iota(indices.begin(), indices.end(), 0);
            shuffle(indices, rng);
            labeling.groups = {{indices.begin(), indices.begin() + 3},
                               {indices.begin() + 3, indices.end()}};
            CHECK(joint_loss(d, labeling) ==
                  doctest::Approx(naive_joint_loss(d, labeling)).epsilon(1e-13));
        }
    }
    SUBCASE("three groups are supported") {
        const auto d = constant_distance_matrix(7, 2.0);
        Labeling labeling{{{0, 1}, {2, 3}, {4, 5, 6}}};
        // each pair contributes 4; groups of2: 4/2 = 2; group of 3: 3 pairs*4/(3*2) = 2
        CHECK(joint_loss(d, labeling) == doctest::Approx(6.0).epsilon(1e-14));
    }
    SUBCASE("invariant violations throw") {
        const auto d = constant_distance_matrix(4, 1.0);
        CHECK_THROWS_AS(joint_loss(d, {{{0, 1}, {2}}}), std::invalid_argument);
        CHECK_THROWS_AS(joint_loss(d, {{{0, 1}, {2, 4}}}), std::invalid_argument);
    }
}

TEST_CASE("randomization test basics") {
    Rng rng(7);
    const auto d = random_distance_matrix(rng, 10);
    const auto labeling = two_group_labeling(5, 5);

    SUBCASE("p = count / N exactly and fields are consistent") {
        const auto r = randomization_test(d, labeling, 999, 123);
        CHECK(r.replicates == 999);
        CHECK(r.count >= 0);
        CHECK(r.count <= 999);
        CHECK(r.p_value == static_cast<double>(r.count) / 999.0);
        CHECK(r.seed == 123);
        CHECK(r.observed_loss == joint_loss(d, labeling));
    }
    SUBCASE("identical inputs give identical results") {
        const auto r1 = randomization_test(d, labeling, 2000, 5);
        const auto r2 = randomization_test(d, labeling, 2000, 5);
        CHECK(r1.count == r2.count);
        CHECK(r1.p_value == r2.p_value);
    }
    SUBCASE("parallel equals sequential") {
        const auto r1 = randomization_test(d, labeling, 5000, 5, 1);
        const auto r8 = randomization_test(d, labeling, 5000, 5, 8);
        CHECK(r1.count == r8.count);
    }
    SUBCASE("N = 1 gives p in {0, 1}") {
        const auto r = randomization_test(d, labeling, 1, 99);
        CHECK((r.p_value == 0.0 || r.p_value == 1.0));
    }
    SUBCASE("replicates must be positive") {
        CHECK_THROWS_AS(randomization_test(d, labeling, 0, 1), std::invalid_argument);
    }
}

TEST_CASE("all-equal distances make every relabeling tie: p = 1") {
    const auto d = constant_distance_matrix(9, 3.5);
    const auto r = randomization_test(d, two_group_labeling(4, 5), 500, 2024);
    CHECK(r.p_value == 1.0);
}

TEST_CASE("swapping group identities leaves p unchanged") {
    Rng rng(10101);
    const auto d = random_distance_matrix(rng, 9);
    Labeling ab{{{0, 1, 2, 3}, {4, 5, 6, 7, 8}}};
    Labeling ba{{{4, 5, 6, 7, 8}, {0, 1, 2, 3}}};
    // Same partition, so the losses tie exactly; the null distribution of
    // (4,5) splits differs from (5,4) only by the same relabeling symmetry.
    CHECK(joint_loss(d, ab) == joint_loss(d, ba));
    const auto pab = exhaustive_test(d, ab);
    const auto pba = exhaustive_test(d, ba);
    CHECK(pab.p_value == pba.p_value);
}

TEST_CASE("scaling all distances leaves the count unchanged") {
    Rng rng(321);
    const auto d = random_distance_matrix(rng, 8);
    const auto labeling = two_group_labeling(4, 4);
    const auto base = randomization_test(d, labeling, 2000, 77);
    for (const double lambda : {0.5, 2.0, 4.0, 3.0}) {
        DistanceMatrix scaled = d;
        for (auto& e : scaled.entries) e *= lambda;
        const auto r = randomization_test(scaled, labeling, 2000, 77);
        CHECK(r.count == base.count);
    }
}

TEST_CASE("unique minimizer over 4 items: p approaches 1/3") {
    // Two tight pairs far apart; the observed split {0,1}/{2,3} is the
    // unique loss minimizer among the 3 distinct splits.
    DistanceMatrix d;
    d.n = 4;
    d.entries.assign(16, 10.0);
    for (std::size_t i = 0; i < 4; ++i) d.at(i, i) = 0.0;
    d.at(0, 1) = d.at(1, 0) = 1.0;
    d.at(2, 3) = d.at(3, 2) = 1.0;

    const auto r = randomization_test(d, two_group_labeling(2, 2), 10000, 5551);
    CHECK(std::abs(r.p_value - 1.0 / 3.0) <= 0.02);

    const auto exact = exhaustive_test(d, two_group_labeling(2, 2));
    CHECK(exact.replicates == 6);
    CHECK(exact.count == 2); // the split and its mirror
    CHECK(exact.p_value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exhaustive test") {
    Rng rng(888);

    SUBCASE("n1 = n2 = 2 enumerates C(4,2) = 6 relabelings") {
        const auto d = random_distance_matrix(rng, 4);
        const auto r = exhaustive_test(d, two_group_labeling(2, 2));
        CHECK(r.replicates == 6);
        CHECK(r.count >= 1); // the observed labeling is among them
        CHECK(r.p_value >= 1.0 / 6.0);
    }
    SUBCASE("self-inclusion holds on random instances") {
        for (int trial = 0; trial < 10; ++trial) {
            const auto d = random_distance_matrix(rng, 7);
            const auto r = exhaustive_test(d, two_group_labeling(3, 4));
            CHECK(r.replicates == 35);
            CHECK(r.p_value >= 1.0 / 35.0);
        }
    }
    SUBCASE("three groups enumerate the multinomial") {
        const auto d = random_distance_matrix(rng, 7);
        const auto r = exhaustive_test(d, {{{0, 1}, {2, 3}, {4, 5, 6}}});
        CHECK(r.replicates == 210); // 7! / (2! 2! 3!)
    }
    SUBCASE("bound exceeded points at the sampling test") {
        const auto d = random_distance_matrix(rng, 30);
        CHECK_THROWS_WITH_AS(exhaustive_test(d, two_group_labeling(15, 15)),
                             doctest::Contains("randomization_test"),
                             std::runtime_error);
    }
}

TEST_CASE("monte carlo agrees with exhaustive enumeration") {
    Rng rng(20241);
    for (int trial = 0; trial < 5; ++trial) {
        const auto d = random_distance_matrix(rng, 10);
        const auto labeling = two_group_labeling(5, 5);
        const auto exact = exhaustive_test(d, labeling);
        const auto sampled = randomization_test(d, labeling, 20000, 7 + trial);
        CHECK(std::abs(exact.p_value - sampled.p_value) <= 0.015);
    }
}

// Under the null (all observations exchangeable) the p value must not be
// anti-conservative. Scalar stand-ins keep this unit-level check fast; the
// diagram-level version lives in the acceptance suite.
TEST_CASE("sub-uniformity smoke check under an exchangeable null") {
    Rng rng(606060);
    const int runs = 200;
    int le_25 = 0;
    for (int run = 0; run < runs; ++run) {
        std::vector<double> values(12);
        for (auto& v : values) v = rng.next_normal();
        DistanceMatrix d;
        d.n = 12;
        d.entries.assign(144, 0.0);
        for (std::size_t i = 0; i < 12; ++i) {
            for (std::size_t j = 0; j < 12; ++j) d.at(i, j) = std::abs(values[i] - values[j]);
        }
        const auto r = randomization_test(d, two_group_labeling(6, 6), 200,
                                          derive_seed(11, run));
        le_25 += r.p_value <= 0.25;
    }
    const double fraction = static_cast<double>(le_25) / runs;
    CHECK(fraction <= 0.25 + 3.0 * std::sqrt(0.25 * 0.75 / runs));
}
