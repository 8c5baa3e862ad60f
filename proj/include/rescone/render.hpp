#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rescone/cone_audit.hpp"
#include "rescone/level_graphs.hpp"
#include "rescone/matrix.hpp"
#include "rescone/pic_basis.hpp"
#include "rescone/residue_maps.hpp"

namespace rescone {

enum class Format { json, table, csv };

/// "json" | "table" | "csv"; throws unsupported-format.
Format parse_format(std::string_view name);

// JSON codecs. Output uses a fixed key order and two-space indentation.

std::string divisor_class_to_json(const DivisorClass& c);
DivisorClass divisor_class_from_json(std::string_view text);

std::string graph_to_json(const EnhancedLevelGraph& g);
EnhancedLevelGraph graph_from_json(std::string_view text, int n);

std::string residues_to_json(const ResidueVector& r);

// Renderers for every CLI result kind. Unsupported combinations throw
// unsupported-format.

std::string render_basis(int n, const std::vector<KapranovSymbol>& symbols, Format f);
std::string render_boundary(int n, const std::vector<BoundarySet>& sets, Format f);
std::string render(const DivisorClass& c, Format f);
std::string render(const RatMatrix& m, Format f);
std::string render_graphs(const Signature& mu, const std::vector<EnhancedLevelGraph>& graphs, Format f);
std::string render_residues(const Signature& mu, const ResidueVector& r,
                            const std::vector<ResonanceHyperplane>* membership, Format f);
std::string render_components(const Signature& mu, int components, bool with_monodromy, Format f);
std::string render(const RankCertificate& c, Format f);
std::string render(const ReconciliationReport& r, Format f);
std::string render_audit(const RankCertificate& c, const ReconciliationReport& r, Format f);

}  // namespace rescone
