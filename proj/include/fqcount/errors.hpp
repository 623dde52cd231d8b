#pragma once

#include <stdexcept>
#include <string>

namespace fqcount {

/// An argument lies outside an operation's stated domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A field order that is not of the form p^k with p prime.
class NotPrimePowerError : public DomainError {
public:
    explicit NotPrimePowerError(unsigned long long q)
        : DomainError(std::to_string(q) + " is not a prime power") {}
};

/// A computation would exceed a configured resource cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fqcount
