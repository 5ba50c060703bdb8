#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/baseline.hpp"
#include "qrs/errors.hpp"

#include <cmath>

using namespace qrs;

TEST_CASE("closed-form random baseline") {
    CHECK(s_average(5, 2) == rational_from(15));
    CHECK(s_average(12, 12) == rational_from(12));
    CHECK(s_average(12, 5) == rational_from(40));

    // prime-sized residue baseline: s((p+1)/2) = p(2p - (p+1)/2 + 1)/((p+1)/2)
    for (std::uint64_t p : {5ULL, 13ULL, 101ULL, 997ULL}) {
        const std::uint64_t k = (p + 1) / 2;
        Rational expected = rational_from(static_cast<long long>(p)) *
                            rational_from(static_cast<long long>(2 * p - k + 1)) /
                            rational_from(static_cast<long long>(k + 1));
        CHECK(s_average(p, k) == expected);
        // asymptotically ~ 3p
        CHECK(s_average(p, k).get_d() ==
              doctest::Approx(3.0 * static_cast<double>(p)).epsilon(0.35));
    }

    CHECK_THROWS_AS(s_average(5, 1), RangeError);
    CHECK_THROWS_AS(s_average(5, 6), RangeError);
    CHECK_THROWS_AS(s_average(1, 1), RangeError);
}

TEST_CASE("enumeration oracle and closed form agree") {
    CHECK(s_average_bruteforce(5, 2) == rational_from(15));
    CHECK(s_average_bruteforce(6, 6) == rational_from(6));
    CHECK(s_average_bruteforce(12, 5) == s_average(12, 5));
    CHECK_THROWS_AS(s_average_bruteforce(17, 3), ResourceError);

    for (std::uint64_t n = 2; n <= 14; ++n) {
        for (std::uint64_t k = 2; k <= n; ++k) {
            REQUIRE(s_average(n, k) == s_average_bruteforce(n, k));
        }
    }
}

TEST_CASE("baseline respects the equidistribution floor") {
    // s(k) * k >= n^2 exactly, strict for k < n
    for (std::uint64_t n = 2; n <= 40; ++n) {
        for (std::uint64_t k = 2; k <= n; ++k) {
            Rational floor_check = s_average(n, k) * rational_from(static_cast<long long>(k));
            Rational square = rational_from(static_cast<long long>(n * n));
            if (k < n) {
                REQUIRE(floor_check > square);
            } else {
                REQUIRE(floor_check >= square);
            }
        }
    }
}

TEST_CASE("torus gap tail closed form") {
    CHECK(torus_gap_tail(7, 0.0) == 1.0);
    CHECK(torus_gap_tail(2, 1.0) == doctest::Approx(0.5));
    CHECK(torus_gap_tail(1000, 1.0) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-3));
    CHECK_THROWS_AS(torus_gap_tail(2, -0.1), RangeError);
    CHECK_THROWS_AS(torus_gap_tail(2, 2.5), RangeError);
    CHECK_THROWS_AS(torus_gap_tail(1, 0.5), RangeError);
}

TEST_CASE("Monte Carlo tail estimator") {
    CHECK(torus_gap_tail_mc(17, 0.0, 10, 42) == 1.0);

    // deterministic under a fixed seed
    double first = torus_gap_tail_mc(5, 1.0, 20'000, 7);
    double second = torus_gap_tail_mc(5, 1.0, 20'000, 7);
    CHECK(first == second);

    // 4-sigma agreement with the closed form on a small grid
    const std::uint64_t samples = 200'000;
    struct GridPoint { std::uint64_t k; double t; };
    for (GridPoint point : {GridPoint{2, 1.0}, GridPoint{5, 0.5}, GridPoint{50, 2.0}}) {
        const double exact = torus_gap_tail(point.k, point.t);
        const double estimate =
            torus_gap_tail_mc(point.k, point.t, samples, 20260809);
        const double sigma =
            std::sqrt(exact * (1.0 - exact) / static_cast<double>(samples));
        CHECK(std::abs(estimate - exact) <= 4.0 * sigma);
    }

    CHECK_THROWS_AS(torus_gap_tail_mc(2, 1.0, 0, 1), RangeError);
    CHECK_THROWS_AS(torus_gap_tail_mc(1, 1.0, 10, 1), RangeError);
}

TEST_CASE("weighted binomial identities at pinned points") {
    IdentityCheck plain = binom_identity_check(2, 3, 0);
    CHECK(plain.lhs == 20);
    CHECK(plain.rhs == 20);

    IdentityCheck empty = binom_identity_check(9, 0, 0);
    CHECK(empty.lhs == 1);
    CHECK(empty.rhs == 1);

    IdentityCheck square = binom_identity_check(2, 3, 2);
    CHECK(square.lhs == 27);
    CHECK(square.rhs == 27);

    CHECK_THROWS_AS(binom_identity_check(2, 3, 3), RangeError);
    CHECK_THROWS_AS(binom_identity_check(2, 3, -1), RangeError);
}

TEST_CASE("weighted binomial identities hold on the sweep") {
    for (unsigned u = 0; u <= 30; ++u) {
        for (unsigned v = 0; v <= 30; ++v) {
            for (int moment = 0; moment <= 2; ++moment) {
                IdentityCheck check = binom_identity_check(u, v, moment);
                REQUIRE(check.lhs == check.rhs);
            }
        }
    }
}
