#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

// Raised by exact division when the quotient is not an integer polynomial.
class NotDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an argument falls outside the domain of a construct
// (integral alpha, d < 2 for Phi_d(1), gcd conditions, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when inverting an element of Q[q]/(Phi_d) that is not a unit.
class NotInvertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qcong
