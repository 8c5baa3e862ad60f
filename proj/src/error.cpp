#include "rescone/error.hpp"

namespace rescone {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_marking_count: return "invalid-marking-count";
    case Errc::invalid_boundary_set: return "invalid-boundary-set";
    case Errc::wrong_basis: return "wrong-basis";
    case Errc::invalid_kept_set: return "invalid-kept-set";
    case Errc::invalid_symbol: return "invalid-symbol";
    case Errc::signature_mismatch: return "signature-mismatch";
    case Errc::invalid_tree: return "invalid-tree";
    case Errc::undefined_ell: return "undefined-ell";
    case Errc::anchor_not_pole: return "anchor-not-pole";
    case Errc::not_two_vertex: return "not-two-vertex";
    case Errc::unsupported_signature: return "unsupported-signature";
    case Errc::bad_sum: return "bad-sum";
    case Errc::zero_entry: return "zero-entry";
    case Errc::bad_ordering: return "bad-ordering";
    case Errc::too_few_poles: return "too-few-poles";
    case Errc::invalid_s: return "invalid-S";
    case Errc::invalid_hyperplane: return "invalid-hyperplane";
    case Errc::degenerate_configuration: return "degenerate-configuration";
    case Errc::nonzero_residue_sum: return "nonzero-residue-sum";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::unknown_fixture: return "unknown-fixture";
    case Errc::parse_error: return "parse-error";
    case Errc::unsupported_format: return "unsupported-format";
  }
  return "unknown-error";
}

bool is_usage_error(Errc code) noexcept {
  return code == Errc::parse_error || code == Errc::unsupported_format;
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace rescone
