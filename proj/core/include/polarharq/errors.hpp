#pragma once

#include <stdexcept>
#include <string>

namespace polarharq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A length is not a power of two, or two blocks that must agree do not.
class InvalidLength : public Error {
 public:
  using Error::Error;
};

/// More information bits were requested than the code can carry.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A CodeSpec violates its own invariants (bit counts, partner ordering).
class SpecError : public Error {
 public:
  using Error::Error;
};

/// An extension was requested on a spec that already carries pc-frozen bits.
class NestingError : public Error {
 public:
  using Error::Error;
};

/// A HARQ session received an event that is illegal in its current state.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or serialized document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace polarharq
