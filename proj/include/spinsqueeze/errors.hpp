#pragma once

#include <stdexcept>
#include <string>

namespace spinsq {

enum class Errc {
  invalid_argument,
  dim_mismatch,
  space_mismatch,
  not_hermitian,
  not_antihermitian,
  no_convergence,
  non_symmetric_coefficients,
  overflow,
  not_block_structured,
  bad_axis,
  mean_spin_vanishes,
  pole_at_vanishing_mean_spin,
  config_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace spinsq
