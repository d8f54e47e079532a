#ifndef PBLAB_ERROR_HPP
#define PBLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pblab {

enum class errc {
  nvars_mismatch,
  index_out_of_range,
  zero_divisor,
  constant_input,
  not_commuting,
  h_is_proper_power,
  inconsistent,
  non_divisible,
  not_applicable,
  invalid_parameters,
  parse_error,
  dimension_mismatch,
  resource_limit,
  invariant_violation,
};

const char* errc_name(errc c);

// Domain error carrying a machine-readable code; the CLI maps these to
// exit status 1 with a structured diagnostic.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace pblab

#endif
