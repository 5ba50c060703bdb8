#include "qrs/arith.hpp"

#include "qrs/errors.hpp"

namespace qrs {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every 64-bit integer.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) {
        throw RangeError("factorize: n must be positive");
    }
    constexpr std::uint64_t kTrialLimit = 10'000'000;
    std::vector<std::pair<std::uint64_t, int>> factors;
    auto push = [&factors](std::uint64_t p, int e) {
        factors.emplace_back(p, e);
    };
    for (std::uint64_t d : {2ULL, 3ULL}) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            push(d, e);
        }
    }
    for (std::uint64_t d = 5; d * d <= n && d <= kTrialLimit; d += 6) {
        for (std::uint64_t q : {d, d + 2}) {
            if (n % q == 0) {
                int e = 0;
                while (n % q == 0) {
                    n /= q;
                    ++e;
                }
                push(q, e);
            }
        }
    }
    if (n > 1) {
        if (!is_prime(n)) {
            throw ResourceError(
                "factorize: composite cofactor beyond the trial-division budget");
        }
        push(n, 1);
    }
    return factors;
}

bool is_squarefree(std::uint64_t n) {
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return false;
    }
    return true;
}

int prime_omega(std::uint64_t n) {
    return static_cast<int>(factorize(n).size());
}

} // namespace qrs
