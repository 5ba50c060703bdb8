#include "qrs/analysis.hpp"

#include "qrs/arith.hpp"
#include "qrs/baseline.hpp"
#include "qrs/errors.hpp"
#include "qrs/poly.hpp"
#include "qrs/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qrs {

namespace {

Rational r_size_of(std::uint64_t a_modulus) {
    return rational_from(
        static_cast<long long>(quadratic_residues(a_modulus).size()));
}

} // namespace

std::vector<ComparisonRecord> compare_table(std::uint64_t a_min, std::uint64_t a_max) {
    if (a_min < 3 || a_min > a_max) {
        throw RangeError("comparison range must satisfy 3 <= a_min <= a_max");
    }
    std::vector<ComparisonRecord> table;
    table.reserve(a_max - a_min + 1);
    for (std::uint64_t a = a_min; a <= a_max; ++a) {
        ComparisonRecord record;
        record.a_modulus = a;
        record.lhs = 2 * fa_eval(a, rational_from(1, 2));
        Rational aa = rational_from(static_cast<long long>(a));
        record.rhs = 4 * aa * aa / r_size_of(a) - aa;
        record.lhs_less = record.lhs < record.rhs;
        record.squarefree = is_squarefree(a);
        table.push_back(std::move(record));
    }
    return table;
}

Theorem13Report theorem13_check(std::uint64_t a_modulus, std::uint64_t prime_p) {
    if (a_modulus < 3) {
        throw HypothesisError("a_modulus must be at least 3");
    }
    if (!is_squarefree(a_modulus)) {
        throw HypothesisError("a_modulus must be squarefree");
    }
    if (!is_prime(prime_p)) {
        throw HypothesisError("p must be prime");
    }
    if (std::gcd(a_modulus, prime_p) != 1) {
        throw HypothesisError("a_modulus and p must be coprime");
    }
    Theorem13Report report;
    report.a_modulus = a_modulus;
    report.prime_p = prime_p;
    report.s_exact = stochasticity(quadratic_residues(a_modulus * prime_p));
    report.prediction = 2 * fa_eval(a_modulus, rational_from(1, 2)) *
                        rational_from(static_cast<long long>(prime_p));
    report.residual = rational_from(report.s_exact) - report.prediction;
    report.envelope = std::pow(static_cast<double>(a_modulus), 3.0) *
                      std::pow(static_cast<double>(prime_p), 0.95);
    return report;
}

std::vector<ConvergencePoint> theorem13_convergence(
    std::uint64_t a_modulus, const std::vector<std::uint64_t>& primes) {
    std::vector<ConvergencePoint> series;
    series.reserve(primes.size());
    for (std::uint64_t p : primes) {
        Theorem13Report report = theorem13_check(a_modulus, p);
        Rational ratio = abs(report.residual) /
                         rational_from(static_cast<long long>(p));
        series.push_back({p, ratio.get_d()});
    }
    return series;
}

OmegaVerdict omega_membership(std::uint64_t m_value, double c0) {
    if (m_value < 3) {
        throw RangeError("m_value must be at least 3");
    }
    if (!(c0 > 2.0)) {
        throw RangeError("c0 must exceed 2");
    }
    OmegaVerdict verdict;
    verdict.m_value = m_value;
    verdict.c0 = c0;

    const auto factors = factorize(m_value);
    verdict.omega = static_cast<int>(factors.size());

    bool squarefree = true;
    for (const auto& [p, e] : factors) {
        (void)p;
        if (e > 1) squarefree = false;
    }
    if (!squarefree) {
        verdict.failed_conditions.push_back(OmegaCondition::squarefree);
    }

    const double log_m = std::log(static_cast<double>(m_value));
    const double loglog_m = std::log(log_m);
    if (!(0.9 * loglog_m < verdict.omega && verdict.omega < 1.1 * loglog_m)) {
        verdict.failed_conditions.push_back(OmegaCondition::factor_count);
    }

    // Canonical split: the smooth part collects every prime power with
    // p <= (log M)^c0; the representation in the membership condition is
    // forced to be exactly this one when it exists.
    const double smooth_threshold = std::pow(log_m, c0);
    verdict.a_part = 1;
    verdict.m_part = 1;
    for (const auto& [p, e] : factors) {
        std::uint64_t power = 1;
        for (int i = 0; i < e; ++i) power *= p;
        if (static_cast<double>(p) <= smooth_threshold) {
            verdict.a_part *= power;
        } else {
            verdict.m_part *= power;
        }
    }
    const double a_limit = std::pow(log_m, 0.1);
    if (verdict.a_part < 3 ||
        static_cast<double>(verdict.a_part) > a_limit) {
        verdict.failed_conditions.push_back(OmegaCondition::smooth_rough_split);
    }

    verdict.is_member = verdict.failed_conditions.empty();
    return verdict;
}

Theorem15Report theorem15_diagnostic(std::uint64_t m_value, std::uint64_t a_split) {
    Theorem15Report report;
    report.m_value = m_value;
    report.a_split = a_split;

    if (a_split < 3) {
        report.hypothesis_flags.push_back("a_split below 3");
    }
    if (!is_squarefree(m_value)) {
        report.hypothesis_flags.push_back("m_value not squarefree");
    }
    if (a_split == 0 || m_value % a_split != 0) {
        report.hypothesis_flags.push_back("a_split does not divide m_value");
    } else if (std::gcd(a_split, m_value / a_split) != 1) {
        report.hypothesis_flags.push_back("split parts are not coprime");
    }

    ResidueSet residues_m = quadratic_residues(m_value);
    report.s_exact = stochasticity(residues_m);
    Rational mm = rational_from(static_cast<long long>(m_value));
    report.leading =
        2 * mm * mm / rational_from(static_cast<long long>(residues_m.size()));
    if (a_split >= 3) {
        report.correction = mm * rational_from(static_cast<long long>(a_split)) /
                            r_size_of(a_split);
    } else {
        report.correction = 0;
    }
    report.residual =
        rational_from(report.s_exact) - report.leading + report.correction;
    return report;
}

ExpansionCheck s_baseline_expansion_check(std::uint64_t m_value, std::uint64_t k) {
    ExpansionCheck check;
    check.m_value = m_value;
    check.k = k;
    check.exact = s_average(m_value, k);
    Rational mm = rational_from(static_cast<long long>(m_value));
    check.expansion = 2 * mm * mm / rational_from(static_cast<long long>(k)) - mm;
    check.gap = check.exact - check.expansion;
    return check;
}

std::vector<KrTailPoint> kr_tail(std::uint64_t m_value,
                                 const std::vector<double>& u_grid) {
    ResidueSet set = quadratic_residues(m_value);
    if (set.size() < 2) {
        throw UndefinedGapsError("tail needs at least two residues");
    }
    const double mean_gap =
        static_cast<double>(m_value) / static_cast<double>(set.size());
    std::vector<KrTailPoint> points;
    points.reserve(u_grid.size());
    for (double u : u_grid) {
        const double threshold = u * mean_gap;
        std::uint64_t exceed = 0;
        for (std::uint64_t g : set.gaps) {
            if (static_cast<double>(g) > threshold) ++exceed;
        }
        points.push_back({u,
                          static_cast<double>(exceed) /
                              static_cast<double>(set.size()),
                          std::exp(-u)});
    }
    return points;
}

double aryan_ratio(std::uint64_t m_value) {
    if (!is_squarefree(m_value)) {
        throw HypothesisError("aryan_ratio requires a squarefree modulus");
    }
    const auto factors = factorize(m_value);
    double bound = static_cast<double>(m_value) *
                   std::ldexp(1.0, static_cast<int>(factors.size())) *
                   std::log(static_cast<double>(m_value));
    for (const auto& [p, e] : factors) {
        (void)e;
        const double pd = static_cast<double>(p);
        bound *= (1.0 + 1.0 / std::sqrt(pd)) * (1.0 - 1.0 / pd);
    }
    const long long s = stochasticity(quadratic_residues(m_value));
    return static_cast<double>(s) / bound;
}

} // namespace qrs
