#pragma once

#include <stdexcept>
#include <string>

namespace nfund {

enum class errc {
  invalid_input,
  out_of_range,
  degenerate_input,
  degree_overflow,
  vanishing_at_node,
  not_solvable,
};

/// Library-wide exception. The code distinguishes contract violations
/// (invalid_input, out_of_range) from mathematical failure modes
/// (degenerate_input, degree_overflow, vanishing_at_node, not_solvable).
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace nfund
