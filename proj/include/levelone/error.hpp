#pragma once

#include <stdexcept>
#include <string>

namespace levelone {

/// Raised when a value violates its domain invariant (bad ℓ, mixed ℓ,
/// malformed partition, zero character where one is required).
class InvalidDatum : public std::invalid_argument {
public:
    explicit InvalidDatum(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for malformed user input at the CLI / export boundary.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levelone
