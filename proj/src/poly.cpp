#include "qrs/poly.hpp"

#include "qrs/errors.hpp"
#include "qrs/residue.hpp"

#include <cstdint>
#include <utility>

namespace qrs {

namespace {

void require_a(std::uint64_t a_modulus) {
    if (a_modulus < 3) {
        throw RangeError("a_modulus must be at least 3");
    }
}

Rational poly_eval(const std::vector<long long>& coeffs, const Rational& y) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        value = value * y + rational_from(*it);
    }
    return value;
}

std::vector<long long> poly_derivative(const std::vector<long long>& coeffs) {
    std::vector<long long> result;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        result.push_back(static_cast<long long>(k) * coeffs[k]);
    }
    return result;
}

std::vector<long long> geometric_coeffs(std::size_t degree) {
    return std::vector<long long>(degree + 1, 1);
}

long long checked_ll(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(INT64_MAX)) {
        throw ResourceError(std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<long long>(v);
}

// Shared scan over the pairs (i, j) with i and i+j both residues mod A,
// j in [1, A]. For each pair the callback receives j and the number of
// residues strictly inside the cyclic interval (i, i+j); that count is
// maintained incrementally, visiting each value 0..|R_A|-1 exactly once
// per base point i.
template <typename Fn>
void for_each_config(const ResidueSet& set, Fn&& fn) {
    const std::uint64_t a = set.modulus;
    std::vector<bool> member(a, false);
    for (std::uint64_t e : set.elements) member[e] = true;
    for (std::uint64_t i : set.elements) {
        std::uint64_t inner = 0;
        std::uint64_t x = i;
        for (std::uint64_t j = 1; j <= a; ++j) {
            x = (x + 1 == a) ? 0 : x + 1;
            if (member[x]) {
                fn(j, inner);
                ++inner;
            }
        }
    }
}

// Values of the three configuration polynomials at y, computed from the
// defining double sums rather than from the gap closed forms.
std::array<Rational, 3> p_values_direct(const ResidueSet& set, const Rational& y) {
    const std::size_t r_size = set.size();
    std::vector<Rational> y_pow(r_size);
    y_pow[0] = 1;
    for (std::size_t k = 1; k < r_size; ++k) y_pow[k] = y_pow[k - 1] * y;

    std::array<Rational, 3> values{Rational(0), Rational(0), Rational(0)};
    for_each_config(set, [&](std::uint64_t j, std::uint64_t inner) {
        const Rational& w = y_pow[inner];
        Rational jw = rational_from(static_cast<long long>(j)) * w;
        values[0] += w;
        values[1] += jw;
        values[2] += rational_from(static_cast<long long>(j)) * jw;
    });
    return values;
}

} // namespace

GapAutocorrelation alpha_coeffs(std::uint64_t a_modulus) {
    require_a(a_modulus);
    ResidueSet set = quadratic_residues(a_modulus);
    const std::size_t r_size = set.size();
    if (r_size < 2) {
        throw UndefinedGapsError("gap sequence needs at least two elements");
    }
    GapAutocorrelation result;
    result.a_modulus = a_modulus;
    result.alpha.resize(r_size);
    for (std::size_t k = 0; k < r_size; ++k) {
        unsigned __int128 total = 0;
        for (std::size_t i = 0; i < r_size; ++i) {
            std::uint64_t window = 0;
            for (std::size_t l = 0; l <= k; ++l) {
                window += set.gaps[(i + l) % r_size];
            }
            total += static_cast<unsigned __int128>(window) * window;
        }
        result.alpha[k] = checked_ll(total, "gap autocorrelation");
    }
    return result;
}

RationalFunctionFA beta_coeffs(std::uint64_t a_modulus) {
    require_a(a_modulus);
    ResidueSet set = quadratic_residues(a_modulus);
    const std::size_t r_size = set.size();
    RationalFunctionFA fa;
    fa.a_modulus = a_modulus;
    fa.q_degree = r_size - 1;
    fa.f_coeffs.resize(r_size + 1);

    unsigned __int128 squares = 0;
    for (std::uint64_t g : set.gaps) {
        squares += static_cast<unsigned __int128>(g) * g;
    }
    fa.f_coeffs[0] = checked_ll(squares, "numerator coefficient");
    fa.f_coeffs[r_size] = fa.f_coeffs[0];
    for (std::size_t k = 1; k < r_size; ++k) {
        unsigned __int128 cross = 0;
        for (std::size_t i = 0; i < r_size; ++i) {
            cross += static_cast<unsigned __int128>(set.gaps[i]) *
                     set.gaps[(i + k) % r_size];
        }
        fa.f_coeffs[k] = checked_ll(2 * cross, "numerator coefficient");
    }
    return fa;
}

Rational RationalFunctionFA::eval(const Rational& y) const {
    Rational q = poly_eval(geometric_coeffs(q_degree), y);
    if (q == 0) {
        throw DomainError("denominator vanishes at the evaluation point");
    }
    return poly_eval(f_coeffs, y) / q;
}

Rational RationalFunctionFA::derivative(const Rational& y, int order) const {
    if (order != 1 && order != 2) {
        throw RangeError("derivative order must be 1 or 2");
    }
    const std::vector<long long> q_coeffs = geometric_coeffs(q_degree);
    Rational q = poly_eval(q_coeffs, y);
    if (q == 0) {
        throw DomainError("denominator vanishes at the evaluation point");
    }
    const std::vector<long long> f1 = poly_derivative(f_coeffs);
    const std::vector<long long> q1 = poly_derivative(q_coeffs);
    Rational f = poly_eval(f_coeffs, y);
    Rational fp = poly_eval(f1, y);
    Rational qp = poly_eval(q1, y);
    if (order == 1) {
        return (fp * q - f * qp) / (q * q);
    }
    Rational fpp = poly_eval(poly_derivative(f1), y);
    Rational qpp = poly_eval(poly_derivative(q1), y);
    return (fpp * q * q - 2 * fp * qp * q - f * qpp * q + 2 * f * qp * qp) /
           (q * q * q);
}

Rational fa_eval(std::uint64_t a_modulus, const Rational& y) {
    return beta_coeffs(a_modulus).eval(y);
}

Rational fa_derivative_eval(std::uint64_t a_modulus, const Rational& y, int order) {
    return beta_coeffs(a_modulus).derivative(y, order);
}

Rational ga_series(std::uint64_t a_modulus, const Rational& y, int k_max) {
    require_a(a_modulus);
    if (y <= 0 || y >= 1) {
        throw DomainError("series argument must lie strictly in (0, 1)");
    }
    if (k_max < 1) {
        throw RangeError("k_max must be at least 1");
    }
    ResidueSet set = quadratic_residues(a_modulus);
    const auto p_values = p_values_direct(set, y);
    const Rational a = rational_from(static_cast<long long>(a_modulus));
    const Rational x = rational_pow(y, static_cast<unsigned long>(set.size()));

    // sum_{k=0}^{k_max} y^{|R|k} (A^2 k^2 P0(y) + 2 A k P1(y) + P2(y))
    Rational total = 0;
    Rational x_pow = 1;
    for (int k = 0; k <= k_max; ++k, x_pow *= x) {
        Rational kq = rational_from(k);
        total += x_pow * (a * a * kq * kq * p_values[0] +
                          2 * a * kq * p_values[1] + p_values[2]);
    }
    return total;
}

Rational ga_series_remainder(std::uint64_t a_modulus, const Rational& y, int k_max) {
    require_a(a_modulus);
    if (y <= 0 || y >= 1) {
        throw DomainError("series argument must lie strictly in (0, 1)");
    }
    if (k_max < 1) {
        throw RangeError("k_max must be at least 1");
    }
    ResidueSet set = quadratic_residues(a_modulus);
    const auto p_values = p_values_direct(set, y);
    const Rational a = rational_from(static_cast<long long>(a_modulus));
    const Rational x = rational_pow(y, static_cast<unsigned long>(set.size()));
    const Rational one_minus = Rational(1) - x;
    const Rational start = rational_from(k_max + 1);

    // Closed forms of the geometric tails starting at K = k_max + 1:
    //   sum_{k>=K} x^k       = x^K / (1-x)
    //   sum_{k>=K} k x^k     = x^K (K/(1-x) + x/(1-x)^2)
    //   sum_{k>=K} k^2 x^k   = x^K (K^2/(1-x) + 2K x/(1-x)^2 + x(1+x)/(1-x)^3)
    Rational x_start = rational_pow(x, static_cast<unsigned long>(k_max + 1));
    Rational inv1 = Rational(1) / one_minus;
    Rational inv2 = inv1 * inv1;
    Rational inv3 = inv2 * inv1;
    Rational s0 = x_start * inv1;
    Rational s1 = x_start * (start * inv1 + x * inv2);
    Rational s2 = x_start * (start * start * inv1 + 2 * start * x * inv2 +
                             x * (Rational(1) + x) * inv3);
    return a * a * p_values[0] * s2 + 2 * a * p_values[1] * s1 + p_values[2] * s0;
}

PPolynomials p_polynomials(std::uint64_t a_modulus) {
    require_a(a_modulus);
    ResidueSet set = quadratic_residues(a_modulus);
    const std::size_t r_size = set.size();

    PPolynomials result;
    result.closed[0].assign(r_size, static_cast<long long>(r_size));
    result.closed[1].resize(r_size);
    for (std::size_t k = 0; k < r_size; ++k) {
        result.closed[1][k] = checked_ll(
            static_cast<unsigned __int128>(a_modulus) * (k + 1), "coefficient");
    }
    result.closed[2] = alpha_coeffs(a_modulus).alpha;

    for (auto& coeffs : result.direct) coeffs.assign(r_size, 0);
    for_each_config(set, [&result](std::uint64_t j, std::uint64_t inner) {
        result.direct[0][inner] += 1;
        result.direct[1][inner] += static_cast<long long>(j);
        result.direct[2][inner] += static_cast<long long>(j * j);
    });
    return result;
}

} // namespace qrs
