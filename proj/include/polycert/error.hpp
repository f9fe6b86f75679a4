#ifndef POLYCERT_ERROR_HPP
#define POLYCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polycert {

/// Error raised by every operation in this library. The code classifies the
/// failure so that the C boundary can translate it into a status value.
class Error : public std::runtime_error {
 public:
  enum class Code {
    kArgument,      // null/ill-formed argument
    kParse,         // text grammar violation
    kDimension,     // variable-count mismatch
    kPrecondition,  // stated operation precondition violated
    kInternal,      // broken internal invariant; a bug, never user input
  };

  Error(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(Error::Code::kParse, msg);
}
[[noreturn]] inline void throw_dimension(const std::string& msg) {
  throw Error(Error::Code::kDimension, msg);
}
[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(Error::Code::kPrecondition, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw Error(Error::Code::kInternal, msg);
}

}  // namespace polycert

#endif  // POLYCERT_ERROR_HPP
