#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qrs {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Prime factorization (ascending), as (prime, exponent) pairs.
/// Trial division up to 1e7 plus a primality test on the remainder;
/// throws ResourceError when the cofactor is composite beyond that budget.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Number of distinct prime factors.
int prime_omega(std::uint64_t n);

} // namespace qrs
