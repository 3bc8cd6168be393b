#pragma once

#include <stdexcept>
#include <string>

namespace euler1d {

/// Failure kinds surfaced by the library. Each maps onto one thrown
/// Error so callers can branch on code() instead of parsing messages.
enum class Errc {
  bad_params,
  bad_state,
  non_hyperbolic,
  inversion_failure,
  no_bracket,
  max_iter_exceeded,
  max_depth_exceeded,
  max_steps_exceeded,
  non_finite,
  constraint_violation,
  out_of_validity,
  cfl_violation,
  vacuum_formed,
  inadmissible_data,
  no_equilibrium,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace euler1d
