#pragma once

#include "qrs/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace qrs {

/// Autocorrelations of the circular gap sequence of R_A:
/// alpha[k] = sum_i (s_i + ... + s_{i+k})^2 with cyclic indices,
/// for k = 0 .. |R_A|-1.
struct GapAutocorrelation {
    std::uint64_t a_modulus = 0;
    std::vector<long long> alpha;
};

/// The rational function f_A = F/Q with integer coefficients:
/// F has coefficients f_coeffs[0..|R_A|] (a reciprocal polynomial) and
/// Q = 1 + y + ... + y^{q_degree} with q_degree = |R_A|-1.
struct RationalFunctionFA {
    std::uint64_t a_modulus = 0;
    std::vector<long long> f_coeffs;
    std::size_t q_degree = 0;

    /// Exact F(y)/Q(y). Throws DomainError when Q(y) = 0 (never for y > 0).
    Rational eval(const Rational& y) const;

    /// Exact first or second derivative of F/Q at y, by the quotient rule on
    /// the integer-coefficient polynomials.
    Rational derivative(const Rational& y, int order) const;
};

/// The three configuration polynomials, each returned twice: from the gap
/// closed forms and from the defining double sums over interval counts.
struct PPolynomials {
    std::array<std::vector<long long>, 3> closed;
    std::array<std::vector<long long>, 3> direct;
};

/// Requires a_modulus >= 3 (so the gap sequence of R_A is nontrivial).
GapAutocorrelation alpha_coeffs(std::uint64_t a_modulus);

RationalFunctionFA beta_coeffs(std::uint64_t a_modulus);

Rational fa_eval(std::uint64_t a_modulus, const Rational& y);

Rational fa_derivative_eval(std::uint64_t a_modulus, const Rational& y, int order);

/// Partial sum of the configuration series for g_A(y), truncating the
/// geometric index at k_max (inclusive). y must lie strictly in (0,1);
/// the terms are positive, so partial sums are nondecreasing in k_max.
Rational ga_series(std::uint64_t a_modulus, const Rational& y, int k_max);

/// Exact remainder of the series beyond k_max: ga_series(A, y, k) converges
/// to ga_series(A, y, k_max) + ga_series_remainder(A, y, k_max) for every
/// k >= k_max, so the remainder doubles as a truncation bound.
Rational ga_series_remainder(std::uint64_t a_modulus, const Rational& y, int k_max);

PPolynomials p_polynomials(std::uint64_t a_modulus);

} // namespace qrs
