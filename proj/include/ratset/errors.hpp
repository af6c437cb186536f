#pragma once

#include <stdexcept>
#include <string>

namespace ratset {

enum class errc {
  invalid_input,
  division_by_zero,
  field_mismatch,
  not_rational_set,
  remainder_nonzero,
  degenerate_curve,
  unsupported_degree,
  reducible_curve,
  wrong_case,
  not_applicable,
  pool_exhausted,
  internal_inconsistency,
  needs_more_points,
  not_certifiable,
  bound_exceeded,
  duplicate_point,
  invalid_configuration,
  general_position_violated,
  isotropic_component,
  multiple_root,
  degenerate_tj,
  common_root,
  parse_error,
  locus_not_finite,
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

} // namespace ratset
