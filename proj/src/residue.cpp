#include "qrs/residue.hpp"

#include "qrs/arith.hpp"
#include "qrs/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace qrs {

namespace {

// One bit per residue class of Z_M.
class Bitmap {
public:
    explicit Bitmap(std::uint64_t size)
        : size_(size), words_((size + 63) / 64, 0) {}

    void set(std::uint64_t i) { words_[i >> 6] |= 1ULL << (i & 63); }

    bool test(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }

    std::uint64_t size() const { return size_; }

    std::uint64_t popcount() const {
        std::uint64_t total = 0;
        for (std::uint64_t w : words_) total += std::popcount(w);
        return total;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                int bit = std::countr_zero(w);
                fn(static_cast<std::uint64_t>(wi) * 64 + bit);
                w &= w - 1;
            }
        }
    }

private:
    std::uint64_t size_;
    std::vector<std::uint64_t> words_;
};

// Marks a^2 mod M for a = 0..floor(M/2); a and M-a square to the same class.
// The square is tracked incrementally ((a+1)^2 = a^2 + 2a + 1), which keeps
// the loop free of divisions.
Bitmap square_bitmap(std::uint64_t modulus) {
    if (modulus < 2) {
        throw InvalidModulusError("modulus must be at least 2");
    }
    if (modulus > sieve_budget()) {
        throw ResourceError("modulus " + std::to_string(modulus) +
                            " exceeds the sieve budget " +
                            std::to_string(sieve_budget()) +
                            " (set QRS_SIEVE_BUDGET to raise)");
    }
    Bitmap bits(modulus);
    std::uint64_t square = 0; // a^2 mod M
    const std::uint64_t half = modulus / 2;
    for (std::uint64_t a = 0;; ++a) {
        bits.set(square);
        if (a == half) break;
        square += 2 * a + 1;
        if (square >= modulus) square -= modulus;
        if (square >= modulus) square -= modulus;
    }
    return bits;
}

void require_gaps(const ResidueSet& set) {
    if (set.size() < 2) {
        throw UndefinedGapsError("gap sequence needs at least two elements");
    }
}

std::vector<std::uint64_t> circular_gaps(const std::vector<std::uint64_t>& elements,
                                         std::uint64_t modulus) {
    std::vector<std::uint64_t> gaps(elements.size());
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
        gaps[i] = elements[i + 1] - elements[i];
    }
    gaps.back() = elements.front() + modulus - elements.back();
    return gaps;
}

} // namespace

std::uint64_t sieve_budget() {
    static const std::uint64_t budget = [] {
        if (const char* env = std::getenv("QRS_SIEVE_BUDGET")) {
            char* end = nullptr;
            unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && parsed >= 2) {
                return static_cast<std::uint64_t>(parsed);
            }
        }
        return std::uint64_t{1'000'000'000};
    }();
    return budget;
}

ResidueSet ResidueSet::from_elements(std::uint64_t modulus,
                                     std::vector<std::uint64_t> elements) {
    if (modulus < 2) {
        throw InvalidModulusError("modulus must be at least 2");
    }
    if (elements.empty()) {
        throw RangeError("element list must be non-empty");
    }
    if (!std::is_sorted(elements.begin(), elements.end()) ||
        std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw RangeError("elements must be strictly increasing");
    }
    if (elements.back() >= modulus) {
        throw RangeError("elements must lie in [0, modulus)");
    }
    ResidueSet set;
    set.modulus = modulus;
    set.gaps = circular_gaps(elements, modulus);
    set.elements = std::move(elements);
    return set;
}

ResidueSet quadratic_residues(std::uint64_t modulus) {
    Bitmap bits = square_bitmap(modulus);
    ResidueSet set;
    set.modulus = modulus;
    set.elements.reserve(bits.popcount());
    bits.for_each_set([&set](std::uint64_t x) { set.elements.push_back(x); });
    set.gaps = circular_gaps(set.elements, modulus);
    return set;
}

long long stochasticity(const ResidueSet& set) {
    require_gaps(set);
    unsigned __int128 total = 0;
    for (std::uint64_t g : set.gaps) {
        total += static_cast<unsigned __int128>(g) * g;
    }
    if (total > static_cast<unsigned __int128>(INT64_MAX)) {
        throw ResourceError("stochasticity exceeds 64-bit range");
    }
    return static_cast<long long>(total);
}

GapHistogram gap_histogram(const ResidueSet& set) {
    require_gaps(set);
    GapHistogram histogram;
    for (std::uint64_t g : set.gaps) {
        ++histogram.counts[g];
    }
    return histogram;
}

std::uint64_t max_gap(const ResidueSet& set) {
    require_gaps(set);
    return *std::max_element(set.gaps.begin(), set.gaps.end());
}

std::uint64_t r_count(std::uint64_t a_modulus, std::uint64_t i, std::uint64_t j) {
    if (j < 1 || j > a_modulus) {
        throw RangeError("interval length j must lie in [1, A]");
    }
    Bitmap bits = square_bitmap(a_modulus);
    i %= a_modulus;
    std::uint64_t count = 0;
    std::uint64_t x = i;
    for (std::uint64_t step = 1; step < j; ++step) {
        x = (x + 1 == a_modulus) ? 0 : x + 1;
        if (bits.test(x)) ++count;
    }
    return count;
}

ConfigCount rn_count(std::uint64_t modulus,
                     std::vector<std::uint64_t> c1,
                     std::vector<std::uint64_t> c2) {
    for (auto& c : c1) c %= modulus;
    for (auto& c : c2) c %= modulus;
    std::sort(c1.begin(), c1.end());
    std::sort(c2.begin(), c2.end());
    if (std::adjacent_find(c1.begin(), c1.end()) != c1.end() ||
        std::adjacent_find(c2.begin(), c2.end()) != c2.end()) {
        throw InvalidConfigError("shift sets must not repeat elements");
    }
    std::vector<std::uint64_t> overlap;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw InvalidConfigError("shift sets must be disjoint");
    }

    Bitmap bits = square_bitmap(modulus);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < modulus; ++x) {
        bool ok = true;
        for (std::uint64_t c : c1) {
            std::uint64_t y = x + c;
            if (y >= modulus) y -= modulus;
            if (!bits.test(y)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            for (std::uint64_t c : c2) {
                std::uint64_t y = x + c;
                if (y >= modulus) y -= modulus;
                if (bits.test(y)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) ++count;
    }

    ConfigCount result;
    result.modulus = modulus;
    result.c1 = c1;
    result.c2 = c2;
    result.count = count;

    const std::uint64_t total_shifts = c1.size() + c2.size();
    if (is_prime(modulus)) {
        // main term p 2^{-(|C1|+|C2|)} with explicit deviation bound
        // 0.5 (|C1|+|C2|) (sqrt(p) + 1).
        result.main_term =
            rational_from(static_cast<long long>(modulus)) /
            rational_pow(rational_from(2), total_shifts);
        result.bound = 0.5 * static_cast<double>(total_shifts) *
                       (std::sqrt(static_cast<double>(modulus)) + 1.0);
    } else if (is_squarefree(modulus)) {
        auto factors = factorize(modulus);
        std::uint64_t least_prime = factors.front().first;
        bool shifts_small = true;
        for (std::uint64_t c : c1) shifts_small = shifts_small && c < least_prime;
        for (std::uint64_t c : c2) shifts_small = shifts_small && c < least_prime;
        if (shifts_small) {
            // main term m 2^{-s1 t} (1 - 2^{-t})^{s2}; no explicit bound.
            const unsigned long t = factors.size();
            Rational residue_prob = rational_from(1) / rational_pow(rational_from(2), t);
            Rational term = rational_from(static_cast<long long>(modulus));
            term *= rational_pow(residue_prob, static_cast<unsigned long>(c1.size()));
            term *= rational_pow(Rational(1) - residue_prob,
                                 static_cast<unsigned long>(c2.size()));
            result.main_term = term;
        }
    }
    return result;
}

std::uint64_t nonresidue_run_count(std::uint64_t modulus, std::uint64_t h) {
    if (h < 1) {
        throw RangeError("run length must be at least 1");
    }
    // A circular gap of length l contributes max(0, l - h) starting points.
    ResidueSet set = quadratic_residues(modulus);
    std::uint64_t count = 0;
    for (std::uint64_t g : set.gaps) {
        if (g > h) count += g - h;
    }
    return count;
}

CharacterSum legendre_product_sum(std::uint64_t p,
                                  const std::vector<std::uint64_t>& shifts) {
    if (!is_prime(p) || p == 2) {
        throw InvalidModulusError("character sum requires an odd prime modulus");
    }
    if (shifts.empty()) {
        throw InvalidConfigError("at least one shift is required");
    }
    std::vector<std::uint64_t> reduced(shifts);
    for (auto& s : reduced) s %= p;
    std::vector<std::uint64_t> sorted(reduced);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidConfigError("shifts must be distinct mod p");
    }

    Bitmap bits = square_bitmap(p);
    auto chi = [&bits](std::uint64_t x) -> int {
        if (x == 0) return 0;
        return bits.test(x) ? 1 : -1;
    };

    long long sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        int term = 1;
        for (std::uint64_t s : reduced) {
            std::uint64_t y = x + s;
            if (y >= p) y -= p;
            int c = chi(y);
            if (c == 0) {
                term = 0;
                break;
            }
            term *= c;
        }
        sum += term;
    }
    return CharacterSum{
        sum, static_cast<double>(reduced.size()) * std::sqrt(static_cast<double>(p))};
}

} // namespace qrs
