#pragma once

#include <stdexcept>
#include <string>

namespace cubetile {

// Every failure the library reports deliberately carries one of these codes,
// so bindings (and the C layer) can translate without parsing messages.
enum class errc {
  invalid_argument,     // malformed input: wrong sizes, zero denominators, ...
  out_of_range,         // input outside the operation's documented domain
  no_decomposition,     // provably impossible target (five squares in a square)
  below_threshold,      // n too small for the requested construction
  not_representable,    // no nonnegative representation exists
  limit_exceeded,       // materialization would exceed the piece limit
  parse_error,          // unreadable document or number
  internal_violation,   // a proven invariant failed at runtime; a bug
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cubetile
