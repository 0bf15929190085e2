#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

enum class ErrorKind {
  Domain,     // argument outside D_F, or outside [0, x0)
  Singular,   // B, V or a pivot vanished
  Numeric,    // non-finite stencil values, ill-conditioned fits
  Usage,      // bad sizes, empty grids, zero sample counts
  Parse,      // malformed profile or field text
  Sampling,   // rejection sampler exhausted its attempts
  Io,
  Invariant,  // internal consistency check failed
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hartogs
