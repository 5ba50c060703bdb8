#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrs/analysis.hpp"
#include "qrs/arith.hpp"
#include "qrs/errors.hpp"
#include "qrs/residue.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace qrs;

namespace {

// Independent stochasticity oracle: squares by definition, gaps by sorting.
long long stochasticity_by_definition(std::uint64_t m) {
    std::set<std::uint64_t> values;
    for (std::uint64_t a = 0; a < m; ++a) values.insert(a * a % m);
    std::vector<std::uint64_t> sorted(values.begin(), values.end());
    long long total = 0;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const long long gap = static_cast<long long>(sorted[i + 1] - sorted[i]);
        total += gap * gap;
    }
    const long long wrap =
        static_cast<long long>(sorted.front() + m - sorted.back());
    return total + wrap * wrap;
}

} // namespace

TEST_CASE("comparison rows at pinned moduli") {
    auto table = compare_table(3, 5);
    REQUIRE(table.size() == 3);

    CHECK(table[0].a_modulus == 3);
    CHECK(table[0].lhs == rational_from(41, 3));
    CHECK(table[0].rhs == rational_from(15));
    CHECK(table[0].lhs_less);
    CHECK(table[0].squarefree);

    CHECK(table[1].a_modulus == 4);
    CHECK_FALSE(table[1].squarefree);

    CHECK(table[2].a_modulus == 5);
    CHECK(table[2].lhs == rational_from(183, 7));
    CHECK(table[2].rhs == rational_from(85, 3));
    CHECK(table[2].lhs_less);

    CHECK_THROWS_AS(compare_table(2, 5), RangeError);
    CHECK_THROWS_AS(compare_table(9, 5), RangeError);
}

TEST_CASE("the single reversal in 3..100 sits at 89") {
    auto table = compare_table(3, 100);
    REQUIRE(table.size() == 98);
    for (const auto& record : table) {
        if (record.a_modulus == 89) {
            CHECK_FALSE(record.lhs_less);
        } else {
            CHECK(record.lhs_less);
        }
    }
}

TEST_CASE("prediction report for A=3, p=101") {
    Theorem13Report report = theorem13_check(3, 101);
    CHECK(report.prediction == rational_from(4141, 3));
    CHECK(report.s_exact == stochasticity_by_definition(303));
    CHECK(report.residual ==
          rational_from(report.s_exact) - rational_from(4141, 3));
    CHECK(report.envelope ==
          doctest::Approx(27.0 * std::pow(101.0, 0.95)));
}

TEST_CASE("prediction hypotheses are enforced") {
    CHECK_THROWS_AS(theorem13_check(4, 101), HypothesisError);  // not squarefree
    CHECK_THROWS_AS(theorem13_check(3, 3), HypothesisError);    // shared factor
    CHECK_THROWS_AS(theorem13_check(3, 15), HypothesisError);   // not prime
    CHECK_THROWS_AS(theorem13_check(2, 7), HypothesisError);    // A below 3
    CHECK_NOTHROW(theorem13_check(3, 2));                       // gcd(3,2) = 1
}

TEST_CASE("residual series over a prime ladder") {
    auto series = theorem13_convergence(3, {101, 1009});
    REQUIRE(series.size() == 2);
    CHECK(series[0].prime_p == 101);
    CHECK(series[1].prime_p == 1009);
    CHECK(series[0].ratio >= 0.0);
    CHECK(series[1].ratio >= 0.0);
}

TEST_CASE("omega membership fixtures") {
    OmegaVerdict four = omega_membership(4, 3.0);
    CHECK_FALSE(four.is_member);
    CHECK(std::count(four.failed_conditions.begin(), four.failed_conditions.end(),
                     OmegaCondition::squarefree) == 1);

    // 31209 = 3 * 101 * 103: too many factors for its size, and no valid split
    OmegaVerdict fixture = omega_membership(31209, 3.0);
    CHECK_FALSE(fixture.is_member);
    CHECK(fixture.omega == 3);
    CHECK(std::count(fixture.failed_conditions.begin(),
                     fixture.failed_conditions.end(),
                     OmegaCondition::factor_count) == 1);
    CHECK(std::count(fixture.failed_conditions.begin(),
                     fixture.failed_conditions.end(),
                     OmegaCondition::smooth_rough_split) == 1);
    CHECK(fixture.a_part * fixture.m_part == 31209);

    CHECK_THROWS_AS(omega_membership(31209, 2.0), RangeError);
    CHECK_THROWS_AS(omega_membership(2, 3.0), RangeError);
}

TEST_CASE("omega verdicts are internally consistent") {
    for (std::uint64_t m : {4ULL, 15ULL, 210ULL, 31209ULL, 9699690ULL,
                            104729ULL, 1048576ULL}) {
        OmegaVerdict verdict = omega_membership(m, 3.0);
        CHECK(verdict.is_member == verdict.failed_conditions.empty());
        CHECK(verdict.a_part * verdict.m_part == m);
        const double threshold =
            std::pow(std::log(static_cast<double>(m)), 3.0);
        for (const auto& [p, e] : factorize(verdict.a_part)) {
            (void)e;
            CHECK(static_cast<double>(p) <= threshold);
        }
        for (const auto& [p, e] : factorize(verdict.m_part)) {
            (void)e;
            CHECK(static_cast<double>(p) > threshold);
        }
        // at desk scale the family is empty: membership needs
        // (log M)^0.1 >= 3, i.e. M > e^(3^10)
        CHECK_FALSE(verdict.is_member);
    }
}

TEST_CASE("second-order diagnostic at the hand-checked split") {
    Theorem15Report report = theorem15_diagnostic(15, 3);
    CHECK(report.s_exact == 49);
    CHECK(report.leading == rational_from(75));
    CHECK(report.correction == rational_from(45, 2));
    CHECK(report.residual == rational_from(-7, 2));
    CHECK(report.hypothesis_flags.empty());

    // bookkeeping identity holds exactly
    CHECK(rational_from(report.s_exact) - report.leading + report.correction ==
          report.residual);
}

TEST_CASE("second-order diagnostic flags hypothesis violations") {
    Theorem15Report small_a = theorem15_diagnostic(13, 1);
    CHECK_FALSE(small_a.hypothesis_flags.empty());

    Theorem15Report square = theorem15_diagnostic(12, 3);
    bool flagged = false;
    for (const auto& flag : square.hypothesis_flags) {
        flagged = flagged || flag.find("squarefree") != std::string::npos;
    }
    CHECK(flagged);

    Theorem15Report bad_split = theorem15_diagnostic(15, 6);
    CHECK_FALSE(bad_split.hypothesis_flags.empty());
}

TEST_CASE("baseline expansion gap") {
    ExpansionCheck check = s_baseline_expansion_check(15, 6);
    CHECK(check.exact == rational_from(375, 7));
    CHECK(check.expansion == rational_from(60));
    CHECK(check.gap == rational_from(-45, 7));

    ExpansionCheck full = s_baseline_expansion_check(24, 24);
    CHECK(full.gap == 0);

    ExpansionCheck wide = s_baseline_expansion_check(1'000'000, 1'000);
    CHECK(abs(wide.gap).get_d() <= 2.0 * 1'000'000.0 / (1'000.0 * 1'000.0));

    CHECK_THROWS_AS(s_baseline_expansion_check(10, 1), RangeError);
}

TEST_CASE("gap tail grid") {
    auto points = kr_tail(3 * 5 * 7 * 11, {0.0, 0.5, 1.0, 2.0});
    REQUIRE(points.size() == 4);
    CHECK(points[0].empirical == 1.0);
    CHECK(points[0].expected == 1.0);
    for (std::size_t i = 1; i < points.size(); ++i) {
        CHECK(points[i].empirical <= points[i - 1].empirical);
        CHECK(points[i].expected == doctest::Approx(std::exp(-points[i].u)));
    }
}

TEST_CASE("product-form gap bound ratio") {
    // M=15: S=49 against 15 * 4 * log 15 * (1+3^-1/2)(2/3)(1+5^-1/2)(4/5)
    double expected = 49.0 /
                      (15.0 * 4.0 * std::log(15.0) *
                       (1.0 + 1.0 / std::sqrt(3.0)) * (2.0 / 3.0) *
                       (1.0 + 1.0 / std::sqrt(5.0)) * (4.0 / 5.0));
    CHECK(aryan_ratio(15) == doctest::Approx(expected));
    CHECK(aryan_ratio(2) > 0.0);
    CHECK_THROWS_AS(aryan_ratio(12), HypothesisError);

    double max_ratio = 0.0;
    for (std::uint64_t m = 2; m <= 10'000; ++m) {
        if (!is_squarefree(m)) continue;
        max_ratio = std::max(max_ratio, aryan_ratio(m));
    }
    // observed maximum is ~0.85 at M=2; 2.0 is a generous sweep ceiling
    CHECK(max_ratio < 2.0);
    CHECK(max_ratio > 0.0);
}
