#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rescone {

enum class Errc {
  invalid_marking_count,
  invalid_boundary_set,
  wrong_basis,
  invalid_kept_set,
  invalid_symbol,
  signature_mismatch,
  invalid_tree,
  undefined_ell,
  anchor_not_pole,
  not_two_vertex,
  unsupported_signature,
  bad_sum,
  zero_entry,
  bad_ordering,
  too_few_poles,
  invalid_s,
  invalid_hyperplane,
  degenerate_configuration,
  nonzero_residue_sum,
  dimension_mismatch,
  unknown_fixture,
  parse_error,
  unsupported_format,
};

/// Stable kebab-case name; these strings surface verbatim on the CLI.
std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by malformed input text or an unsupported output
/// combination rather than by a mathematically invalid request.
bool is_usage_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace rescone
