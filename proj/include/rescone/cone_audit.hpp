#pragma once

#include <string>
#include <vector>

#include "rescone/level_graphs.hpp"
#include "rescone/matrix.hpp"
#include "rescone/pic_basis.hpp"
#include "rescone/signature.hpp"

namespace rescone {

enum class Verdict { polyhedral_at_ray, non_polyhedral_at_ray };
std::string_view verdict_name(Verdict v);

/// Where the first row of the audit matrix came from.
enum class DmuSource { fixture, hyperplane_formula };
std::string_view dmu_source_name(DmuSource s);

struct RankCertificate {
  int n = 0;
  Signature mu;
  int rho = 0;
  std::vector<KapranovSymbol> kept;
  int killed_count = 0;
  RatMatrix matrix;
  int matrix_rank = 0;
  int contracted_span_rank = 0;  // killed_count + matrix_rank
  int corank = 0;                // rho - contracted_span_rank
  Verdict verdict = Verdict::polyhedral_at_ray;
  DmuSource dmu_source = DmuSource::hyperplane_formula;
  int boundary_rows_rank = 0;    // rank without the D^mu row
};

/// Signatures (a_1..a_m, -1^(n-m)) with m in {1,2,3}; throws
/// signature-mismatch or unsupported-signature otherwise.
void require_audit_signature(const Signature& mu, int n);

/// H plus every E_S whose boundary divisor delta_{{1} u S} carries a two-level
/// structure dominating the residue space.
std::vector<KapranovSymbol> kept_generators(const Signature& mu, int n);

/// Pairs {i,j} in {2..n}: pairs of poles in lex order, then pairs involving a
/// zero in lex order.
std::vector<MarkingSet> contracted_pairs(const Signature& mu, int n);

/// delta_{ij} for each pair above, in the Kapranov basis reduced to the kept generators.
std::vector<DivisorClass> contracted_boundary_rows(const Signature& mu, int n);

/// D^mu reduced to the kept generators, from the hyperplane formula.
DivisorClass reduced_dmu_row(const Signature& mu, int n, int anchor);

/// D^mu row followed by the contracted boundary rows; columns are the kept
/// generators. For (2,2,-1^6) the first row is the stored fixture row.
RatMatrix build_audit_matrix(const Signature& mu, int n);
/// Same, also reporting which source supplied the first row.
RatMatrix build_audit_matrix(const Signature& mu, int n, DmuSource& source);

RankCertificate corank_certificate(const Signature& mu, int n);

struct CandidateRow {
  std::string name;
  std::vector<Rational> row;
  std::vector<Rational> difference;  // row - reference
};

struct AnchorRow {
  int anchor = 0;
  std::vector<Rational> row;
};

struct AnchorDifference {
  int anchor_a = 0;
  int anchor_b = 0;
  std::vector<Rational> difference;  // row(a) - row(b)
};

/// Side-by-side comparison of the D^mu row computed three ways against the
/// reference row (the fixture for (2,2,-1^6), the hyperplane formula otherwise),
/// plus anchor dependence of the hyperplane formula. Makes no judgement.
struct ReconciliationReport {
  int n = 0;
  Signature mu;
  int anchor = 0;
  std::vector<KapranovSymbol> columns;
  std::string reference_source;
  std::vector<Rational> reference;
  std::vector<CandidateRow> candidates;
  std::vector<AnchorRow> anchor_rows;
  std::vector<AnchorDifference> anchor_differences;
};

ReconciliationReport reconciliation_report(const Signature& mu, int n, int anchor);

}  // namespace rescone
