#ifndef SGKIT_ERROR_HPP_
#define SGKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sgkit {

  // Every error message starts with the module name, e.g. "psat: ...".
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // An input violates an operation's precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A configured size cap was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A machine check of a constructed object failed; indicates a bug.
  class VerificationError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace sgkit

#endif  // SGKIT_ERROR_HPP_
