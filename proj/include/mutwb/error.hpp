#ifndef MUTWB_ERROR_HPP
#define MUTWB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mutwb {

/// Base of all library errors. The CLI maps each subclass to one exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: JSON that does not match a schema, bad tokens.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A well-formed request that violates an operation's precondition
/// (index out of range, loops where none are allowed, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exact division that has no Laurent-polynomial quotient.
class NotDivisible : public DomainError {
public:
  NotDivisible() : DomainError("not divisible") {}
  explicit NotDivisible(const std::string& what) : DomainError(what) {}
};

/// Node caps or depth limits were hit.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// A query needs an element that lies beyond the enumerated depth.
class DepthExceeded : public ResourceLimit {
public:
  DepthExceeded() : ResourceLimit("depth exceeded") {}
  explicit DepthExceeded(const std::string& what) : ResourceLimit(what) {}
};

} // namespace mutwb

#endif
