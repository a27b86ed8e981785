#pragma once

#include <stdexcept>
#include <string>

namespace ulamlab {

/// Raised when a caller violates an operation's input contract
/// (unsorted prefix, invalid chain, empty checkpoint list, ...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside the mathematical domain of a formula
/// (for example log2(log2(n)) with n < 3).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace ulamlab
