#pragma once

#include "qrs/rational.hpp"

#include <cstdint>
#include <vector>

namespace qrs {

/// One row of the residue-vs-random comparison: lhs = 2 f_A(1/2) against
/// rhs = 4A^2/|R_A| - A, compared exactly.
struct ComparisonRecord {
    std::uint64_t a_modulus = 0;
    Rational lhs;
    Rational rhs;
    bool lhs_less = false;
    bool squarefree = false;
};

/// Exact stochasticity of R_{Ap} against the linear prediction 2 f_A(1/2) p.
/// The envelope A^3 p^0.95 carries an unknown implicit constant, so callers
/// assert residual decay rather than absolute size.
struct Theorem13Report {
    std::uint64_t a_modulus = 0;
    std::uint64_t prime_p = 0;
    long long s_exact = 0;
    Rational prediction;
    Rational residual;
    double envelope = 0.0;
};

struct ConvergencePoint {
    std::uint64_t prime_p = 0;
    double ratio = 0.0; // |residual| / p
};

enum class OmegaCondition { squarefree, factor_count, smooth_rough_split };

/// Verdict of the structured-modulus membership predicate. The split peels
/// every prime <= (log M)^c0 into a_part; membership additionally needs
/// a_part in [3, (log M)^0.1], squarefreeness, and a factor count within
/// (0.9, 1.1) log log M. Logs are natural.
struct OmegaVerdict {
    std::uint64_t m_value = 0;
    double c0 = 0.0;
    bool is_member = false;
    std::uint64_t a_part = 1;
    std::uint64_t m_part = 1;
    int omega = 0;
    std::vector<OmegaCondition> failed_conditions;
};

/// Second-order diagnostic for structured squarefree moduli M = A*m:
/// residual = s_exact - 2M^2/|R_M| + M*A/|R_A|, kept exact.
struct Theorem15Report {
    std::uint64_t m_value = 0;
    std::uint64_t a_split = 0;
    long long s_exact = 0;
    Rational leading;
    Rational correction;
    Rational residual;
    std::vector<std::string> hypothesis_flags;
};

/// Exact gap between s(k) and its first-order expansion 2M^2/k - M.
struct ExpansionCheck {
    std::uint64_t m_value = 0;
    std::uint64_t k = 0;
    Rational exact;
    Rational expansion;
    Rational gap;
};

struct KrTailPoint {
    double u = 0.0;
    double empirical = 0.0;
    double expected = 0.0; // e^{-u}
};

std::vector<ComparisonRecord> compare_table(std::uint64_t a_min, std::uint64_t a_max);

/// Requires A >= 3 squarefree, p prime, gcd(A, p) = 1.
Theorem13Report theorem13_check(std::uint64_t a_modulus, std::uint64_t prime_p);

std::vector<ConvergencePoint> theorem13_convergence(
    std::uint64_t a_modulus, const std::vector<std::uint64_t>& primes);

OmegaVerdict omega_membership(std::uint64_t m_value, double c0);

/// Diagnostic mode: hypothesis violations are reported as flags, not errors.
Theorem15Report theorem15_diagnostic(std::uint64_t m_value, std::uint64_t a_split);

ExpansionCheck s_baseline_expansion_check(std::uint64_t m_value, std::uint64_t k);

std::vector<KrTailPoint> kr_tail(std::uint64_t m_value, const std::vector<double>& u_grid);

/// S(R_M) over the product-form gap bound for squarefree M; the implicit
/// constant is unknown, so the ratio is a diagnostic.
double aryan_ratio(std::uint64_t m_value);

} // namespace qrs
