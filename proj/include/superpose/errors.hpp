#pragma once

#include <stdexcept>
#include <string>

namespace superpose {

enum class Errc {
  non_square,
  not_hermitian,
  no_convergence,
  shape_mismatch,
  zero_matrix,
  length_mismatch,
  zero_vector,
  shrink_not_allowed,
  degenerate_superposition,
  relation_violation,
  domain_error,
  dimension_too_small,
  empty_range,
  config_invalid,
  empty_stream,
  parse_error,
  numeric_failure,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace superpose
