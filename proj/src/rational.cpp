#include "qrs/rational.hpp"

#include "qrs/errors.hpp"

namespace qrs {

Rational rational_from(long long num, long long den) {
    if (den == 0) {
        throw DomainError("rational denominator must be nonzero");
    }
    Rational value(BigInt(num), BigInt(den));
    value.canonicalize();
    return value;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw DomainError("empty rational literal");
    }
    Rational value;
    try {
        value = Rational(text, 10);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal: " + text);
    }
    if (value.get_den() == 0) {
        throw DomainError("rational denominator must be nonzero: " + text);
    }
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

Rational rational_pow(const Rational& value, unsigned long exp) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), value.get_num_mpz_t(), exp);
    mpz_pow_ui(result.get_den_mpz_t(), value.get_den_mpz_t(), exp);
    // num/den were already coprime, so their powers are too.
    return result;
}

} // namespace qrs
