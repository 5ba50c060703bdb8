#pragma once

#include <stdexcept>

namespace qrs {

/// Modulus outside the valid domain (M < 2, non-prime where a prime is required).
struct InvalidModulusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Shift configuration violates a precondition (overlap, repeats).
struct InvalidConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Gap sequence undefined: the set has fewer than two elements.
struct UndefinedGapsError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Scalar argument outside its documented range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Argument outside the mathematical domain of the function.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Input exceeds a configured budget (sieve size, factorization effort).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The hypotheses of the statement being checked do not hold for the input.
struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qrs
