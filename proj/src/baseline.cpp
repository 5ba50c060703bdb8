#include "qrs/baseline.hpp"

#include "qrs/errors.hpp"
#include "qrs/rng.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

namespace qrs {

namespace {

void require_subset_size(std::uint64_t n, std::uint64_t k) {
    if (n < 2) {
        throw RangeError("ambient size n must be at least 2");
    }
    if (k < 2 || k > n) {
        throw RangeError("subset size k must lie in [2, n]");
    }
}

// Stochasticity of the subset encoded by the set bits of mask within Z_n.
std::uint64_t mask_stochasticity(std::uint32_t mask, unsigned n) {
    unsigned first = std::countr_zero(mask);
    unsigned prev = first;
    std::uint64_t total = 0;
    std::uint32_t rest = mask & (mask - 1);
    while (rest != 0) {
        unsigned cur = std::countr_zero(rest);
        std::uint64_t gap = cur - prev;
        total += gap * gap;
        prev = cur;
        rest &= rest - 1;
    }
    std::uint64_t wrap = first + n - prev;
    total += wrap * wrap;
    return total;
}

} // namespace

Rational s_average(std::uint64_t n, std::uint64_t k) {
    require_subset_size(n, k);
    Rational nn = rational_from(static_cast<long long>(n));
    Rational kk = rational_from(static_cast<long long>(k));
    return nn * (2 * nn - kk + 1) / (kk + 1);
}

Rational s_average_bruteforce(std::uint64_t n, std::uint64_t k) {
    require_subset_size(n, k);
    if (n > 16) {
        throw ResourceError("subset enumeration is limited to n <= 16");
    }
    BigInt total = 0;
    std::uint64_t subsets = 0;
    const std::uint32_t limit = static_cast<std::uint32_t>(1ULL << n);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (static_cast<std::uint64_t>(std::popcount(mask)) != k) continue;
        total += static_cast<unsigned long>(
            mask_stochasticity(mask, static_cast<unsigned>(n)));
        ++subsets;
    }
    Rational average(total, BigInt(static_cast<unsigned long>(subsets)));
    average.canonicalize();
    return average;
}

double torus_gap_tail(std::uint64_t k, double t) {
    if (k < 2) {
        throw RangeError("subset size k must be at least 2");
    }
    if (t < 0 || t > static_cast<double>(k)) {
        throw RangeError("t must lie in [0, k]");
    }
    return std::pow(1.0 - t / static_cast<double>(k),
                    static_cast<double>(k - 1));
}

double torus_gap_tail_mc(std::uint64_t k, double t, std::uint64_t samples,
                         std::uint64_t seed) {
    if (k < 2) {
        throw RangeError("subset size k must be at least 2");
    }
    if (samples < 1) {
        throw RangeError("at least one sample is required");
    }
    if (t <= 0.0) {
        return 1.0; // every gap is positive
    }
    // One subset = the point 0 plus k-1 uniforms on the unit torus; the gap
    // that starts at 0 is the minimum of the uniforms, and its normalized
    // length is min * k.
    const double threshold = t / static_cast<double>(k);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        SplitMix64 gen(SplitMix64::mix(seed) ^ SplitMix64::mix(i + 1));
        double lowest = 1.0;
        for (std::uint64_t draw = 1; draw < k; ++draw) {
            double u = gen.next_unit();
            if (u < lowest) lowest = u;
        }
        if (lowest > threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

IdentityCheck binom_identity_check(unsigned u, unsigned v, int moment) {
    if (moment < 0 || moment > 2) {
        throw RangeError("moment must be 0, 1 or 2");
    }
    auto binom = [](unsigned long n, unsigned long k) {
        BigInt value;
        if (k > n) return BigInt(0);
        mpz_bin_uiui(value.get_mpz_t(), n, k);
        return value;
    };

    IdentityCheck check;
    const unsigned start = moment == 0 ? 0 : 1;
    for (unsigned a = start; a <= v; ++a) {
        BigInt weight = 1;
        for (int m = 0; m < moment; ++m) weight *= a;
        check.lhs += weight * binom(u + v - a, u);
    }
    switch (moment) {
        case 0:
            check.rhs = binom(u + v + 1, u + 1);
            break;
        case 1:
            check.rhs = binom(u + v + 1, u + 2);
            break;
        default:
            check.rhs = 2 * binom(u + v + 1, u + 3) + binom(u + v + 1, u + 2);
            break;
    }
    return check;
}

} // namespace qrs
