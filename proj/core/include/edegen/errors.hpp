#ifndef EDEGEN_ERRORS_HPP
#define EDEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edegen {

/// A well-formed request that has no answer in the model's domain
/// (an unrealizable statistic, a boundary direction, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested (e, d) lies outside the row bounds of the model polytope.
class NotRealizable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Work refused because it would exceed the desk-scale cost guard.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (edge lists, cache files, numeric literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace edegen

#endif  // EDEGEN_ERRORS_HPP
