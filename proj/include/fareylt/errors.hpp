#pragma once

#include <stdexcept>
#include <string>

namespace fareylt {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by brute-force routines refusing inputs that would blow up.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

class DeltaIdenticallyZero : public DomainError {
public:
    DeltaIdenticallyZero() : DomainError("discriminant of the family is identically zero") {}
};

class ConstantJInvariant : public DomainError {
public:
    ConstantJInvariant() : DomainError("j-invariant of the family is constant") {}
};

class PrimeTooSmall : public DomainError {
public:
    explicit PrimeTooSmall(long long p)
        : DomainError("prime " + std::to_string(p) + " is too small (need p >= 5)") {}
};

class SupersingularExcluded : public DomainError {
public:
    SupersingularExcluded() : DomainError("a_p = 0 has no imaginary quadratic Frobenius field") {}
};

class NotImaginary : public DomainError {
public:
    NotImaginary() : DomainError("a_p^2 - 4p is not negative") {}
};

} // namespace fareylt
