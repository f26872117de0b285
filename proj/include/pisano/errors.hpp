#pragma once

#include <stdexcept>

namespace pisano {

// gcd(a, m) != 1 where an inverse was required
struct not_invertible : std::domain_error {
    using std::domain_error::domain_error;
};

// modulus fails a precondition (not prime, p = 2 where odd required, ...)
struct invalid_modulus : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_division : std::domain_error {
    using std::domain_error::domain_error;
};

// inverse of a zero-norm element; the ambient ring has zero divisors
struct norm_zero : std::domain_error {
    using std::domain_error::domain_error;
};

// operation only defined in an Inert context
struct wrong_context : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_element : std::domain_error {
    using std::domain_error::domain_error;
};

// gcd(B, m) != 1: the orbit never returns to (0, 1)
struct not_purely_periodic : std::domain_error {
    using std::domain_error::domain_error;
};

// the m^2 iteration cap was hit; indicates an implementation bug
struct cap_exceeded : std::logic_error {
    using std::logic_error::logic_error;
};

// a verified order multiple failed U^N = I; theorem/classification bug
struct bound_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace pisano
