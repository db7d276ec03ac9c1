#pragma once

#include <stdexcept>
#include <string>

namespace oturan {

enum class Errc {
  loop_arc,
  anti_parallel,
  duplicate_arc,
  vertex_out_of_range,
  order_too_large,
  instance_too_large,
  domain_error,
  scheme_error,
  unknown_fixture,
  guard_exceeded,
  syntax_error,
  count_mismatch,
  schema_error,
};

const char* errc_name(Errc c);

/// Single exception type for the whole library; the code tells callers
/// (and the CLI exit-code logic) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace oturan
