#pragma once

#include "qrs/rational.hpp"

#include <cstdint>

namespace qrs {

/// Average stochasticity of a random k-subset of Z_n, with the exact value.
struct BaselineValue {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    Rational value;
};

/// Exact average of the stochasticity parameter over all k-subsets of Z_n:
/// n(2n-k+1)/(k+1). Requires 2 <= k <= n.
Rational s_average(std::uint64_t n, std::uint64_t k);

/// The same average by enumerating every k-subset; n is capped at 16.
Rational s_average_bruteforce(std::uint64_t n, std::uint64_t k);

/// Tail of the normalized gap of a uniform random k-subset of the torus:
/// (1 - t/k)^(k-1) for t in [0, k].
double torus_gap_tail(std::uint64_t k, double t);

/// Monte Carlo estimate of the same tail: the fraction of sampled k-subsets
/// of the unit torus whose first normalized gap exceeds t. Each sample draws
/// its own generator from (seed, sample index), so the result is identical
/// for a fixed (seed, samples) under any internal partitioning.
double torus_gap_tail_mc(std::uint64_t k, double t, std::uint64_t samples,
                         std::uint64_t seed);

/// lhs: the weighted binomial sum  sum_a a^moment * C(u+v-a, u);
/// rhs: its closed form. moment selects the weight a^0, a^1 or a^2.
struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
};

IdentityCheck binom_identity_check(unsigned u, unsigned v, int moment);

} // namespace qrs
