#pragma once

#include "qrs/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qrs {

/// A subset of Z_M held as a sorted element list plus its circular gap
/// sequence. gaps[i] is the distance from elements[i] to the next element,
/// with the last gap wrapping through M; the sequence is anchored at the
/// smallest element, and the gaps always sum to M.
struct ResidueSet {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> elements;
    std::vector<std::uint64_t> gaps;

    std::size_t size() const { return elements.size(); }

    /// Validates and wraps an arbitrary sorted subset of Z_M.
    static ResidueSet from_elements(std::uint64_t modulus,
                                    std::vector<std::uint64_t> elements);
};

/// Gap-length histogram: counts[l] = number of circular gaps of length l.
struct GapHistogram {
    std::map<std::uint64_t, std::uint64_t> counts;
};

/// One additive-configuration count: the number of x in Z_M that are shifted
/// into the residue set by every element of c1 and out of it by every element
/// of c2. main_term/bound are present only when the hypotheses of the
/// corresponding closed form hold (prime modulus, or squarefree modulus with
/// shifts below its least prime factor).
struct ConfigCount {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> c1;
    std::vector<std::uint64_t> c2;
    std::uint64_t count = 0;
    std::optional<Rational> main_term;
    std::optional<double> bound;
};

/// A complete product character sum together with its proven bound r*sqrt(p).
struct CharacterSum {
    long long value = 0;
    double bound = 0.0;
};

/// Maximum modulus the square sieve will accept; env QRS_SIEVE_BUDGET
/// overrides the default of 1e9.
std::uint64_t sieve_budget();

/// The set {a^2 mod M : a in Z_M}, sorted, with circular gaps. 0 is always a
/// member. Throws InvalidModulusError for M < 2 and ResourceError above the
/// sieve budget.
ResidueSet quadratic_residues(std::uint64_t modulus);

/// Sum of squared circular gaps. Requires at least two elements.
long long stochasticity(const ResidueSet& set);

GapHistogram gap_histogram(const ResidueSet& set);

std::uint64_t max_gap(const ResidueSet& set);

/// Number of quadratic residues mod A in the cyclic open interval
/// {i+1, ..., i+j-1}; zero when j = 1. j must lie in [1, A].
std::uint64_t r_count(std::uint64_t a_modulus, std::uint64_t i, std::uint64_t j);

/// Brute-force count of x with x+c in R_M for all c in c1 and x+c not in R_M
/// for all c in c2. c1 and c2 must be disjoint mod M.
ConfigCount rn_count(std::uint64_t modulus,
                     std::vector<std::uint64_t> c1,
                     std::vector<std::uint64_t> c2);

/// Number of x in Z_M starting a run of h consecutive non-residues.
std::uint64_t nonresidue_run_count(std::uint64_t modulus, std::uint64_t h);

/// Exact value of sum_x chi(x+a_1)...chi(x+a_r) for the Legendre symbol
/// mod p (chi(0) = 0), with shifts distinct mod p.
CharacterSum legendre_product_sum(std::uint64_t p,
                                  const std::vector<std::uint64_t>& shifts);

} // namespace qrs
