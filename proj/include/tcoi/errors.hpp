#pragma once

#include <stdexcept>
#include <string>

namespace tcoi {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can catch one type and still dispatch on the concrete kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TCOI_DECLARE_ERROR(Name) \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  }

TCOI_DECLARE_ERROR(ParseError);
TCOI_DECLARE_ERROR(EmptyInput);
TCOI_DECLARE_ERROR(NotATree);
TCOI_DECLARE_ERROR(VertexOutOfRange);
TCOI_DECLARE_ERROR(Undefined);
TCOI_DECLARE_ERROR(TooLarge);
TCOI_DECLARE_ERROR(BadParameter);
TCOI_DECLARE_ERROR(NotATcoiSet);
TCOI_DECLARE_ERROR(IOError);

#undef TCOI_DECLARE_ERROR

// Raised when an operation's attachment vertex is not in a suitable optimal set.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Raised by certificate replay; carries the zero-based index of the bad step.
class InvalidStep : public Error {
 public:
  InvalidStep(std::size_t step_index, const std::string& what)
      : Error("step " + std::to_string(step_index) + ": " + what), step_index_(step_index) {}
  std::size_t step_index() const noexcept { return step_index_; }

 private:
  std::size_t step_index_;
};

class Mismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace tcoi
