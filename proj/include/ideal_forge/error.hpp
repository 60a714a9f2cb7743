#pragma once

#include <stdexcept>
#include <string>

namespace ideal_forge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Unknown builtin ring name.
class CatalogError : public Error
{
  public:
    using Error::Error;
};

/// Malformed ring-spec document, ring expression, or out-of-range argument.
class InputError : public Error
{
  public:
    using Error::Error;
};

/// Two objects that must share an owning ring do not.
class RingMismatch : public Error
{
  public:
    using Error::Error;
};

/// A configured resource guard (ideal count, search size, sweep budget) was hit.
class CapExceeded : public Error
{
  public:
    using Error::Error;
};

/// Violated precondition on integer parameters, e.g. c does not divide a.
class DomainError : public Error
{
  public:
    using Error::Error;
};

} // namespace ideal_forge
