#include "rescone/cone_audit.hpp"

#include <set>

#include "rescone/error.hpp"
#include "rescone/fixtures.hpp"
#include "rescone/residue_maps.hpp"

namespace rescone {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::polyhedral_at_ray ? "polyhedral-at-ray" : "non-polyhedral-at-ray";
}

std::string_view dmu_source_name(DmuSource s) {
  return s == DmuSource::fixture ? "fixture" : "hyperplane-formula";
}

namespace {

const Signature& fixture_signature() {
  static const Signature mu = Signature::validate({2, 2, -1, -1, -1, -1, -1, -1});
  return mu;
}

std::vector<Rational> reduced_row(const DivisorClass& c, const std::vector<KapranovSymbol>& kept) {
  const std::set<KapranovSymbol> keep(kept.begin(), kept.end());
  return quotient_reduce(c, keep).coordinates(kept);
}

std::vector<Rational> subtract(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

void require_audit_signature(const Signature& mu, int n) {
  if (mu.n() != n)
    throw Error(Errc::signature_mismatch, "signature has " + std::to_string(mu.n()) + " entries but n = " +
                                              std::to_string(n));
  if (n < 5) throw Error(Errc::invalid_marking_count, "audit needs n >= 5");
  if (!mu.all_poles_simple() || mu.zero_count() < 1 || mu.zero_count() > 3)
    throw Error(Errc::unsupported_signature, "audit needs (a_1..a_m, -1^(n-m)) with 1 <= m <= 3, got (" +
                                                 mu.str() + ")");
}

std::vector<KapranovSymbol> kept_generators(const Signature& mu, int n) {
  require_audit_signature(mu, n);
  std::vector<KapranovSymbol> kept;
  for (const auto& sym : kapranov_basis(n)) {
    if (sym.kind == SymbolKind::H) {
      kept.push_back(sym);
      continue;
    }
    const StableTree tree = StableTree::two_vertex(n, sym.set.with(1));
    for (const auto& g : two_level_structures(tree, mu)) {
      if (dominates_residue_space(g, mu)) {
        kept.push_back(sym);
        break;
      }
    }
  }
  return kept;
}

std::vector<MarkingSet> contracted_pairs(const Signature& mu, int n) {
  require_audit_signature(mu, n);
  std::vector<MarkingSet> pairs;
  const std::vector<int> poles = mu.poles();
  for (std::size_t i = 0; i < poles.size(); ++i)
    for (std::size_t j = i + 1; j < poles.size(); ++j) pairs.push_back(MarkingSet{poles[i], poles[j]});
  for (int i = 2; i <= mu.zero_count(); ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back(MarkingSet{i, j});
  return pairs;
}

std::vector<DivisorClass> contracted_boundary_rows(const Signature& mu, int n) {
  const auto kept = kept_generators(mu, n);
  const std::set<KapranovSymbol> keep(kept.begin(), kept.end());
  std::vector<DivisorClass> rows;
  for (const auto& pair : contracted_pairs(mu, n))
    rows.push_back(quotient_reduce(boundary_to_kapranov(canonicalize(pair, n)), keep));
  return rows;
}

DivisorClass reduced_dmu_row(const Signature& mu, int n, int anchor) {
  const auto kept = kept_generators(mu, n);
  const std::set<KapranovSymbol> keep(kept.begin(), kept.end());
  return quotient_reduce(to_kapranov(dmu_class(mu, anchor)), keep);
}

RatMatrix build_audit_matrix(const Signature& mu, int n, DmuSource& source) {
  const auto kept = kept_generators(mu, n);
  std::vector<RatVector> rows;
  if (mu == fixture_signature()) {
    const RatMatrix fixture = builtin_fixture(kRankFixture);
    rows.emplace_back(fixture.row(0).begin(), fixture.row(0).end());
    source = DmuSource::fixture;
  } else {
    rows.push_back(reduced_dmu_row(mu, n, n).coordinates(kept));
    source = DmuSource::hyperplane_formula;
  }
  for (const auto& r : contracted_boundary_rows(mu, n)) rows.push_back(r.coordinates(kept));
  return RatMatrix::from_rows(rows);
}

RatMatrix build_audit_matrix(const Signature& mu, int n) {
  DmuSource ignored{};
  return build_audit_matrix(mu, n, ignored);
}

RankCertificate corank_certificate(const Signature& mu, int n) {
  RankCertificate c;
  c.n = n;
  c.mu = mu;
  c.kept = kept_generators(mu, n);
  c.rho = picard_rank(n);
  c.killed_count = c.rho - static_cast<int>(c.kept.size());
  c.matrix = build_audit_matrix(mu, n, c.dmu_source);
  c.matrix_rank = static_cast<int>(rank(c.matrix));
  c.boundary_rows_rank = static_cast<int>(rank(c.matrix.without_row(0)));
  c.contracted_span_rank = c.killed_count + c.matrix_rank;
  c.corank = c.rho - c.contracted_span_rank;
  c.verdict = c.corank >= 2 ? Verdict::non_polyhedral_at_ray : Verdict::polyhedral_at_ray;
  return c;
}

ReconciliationReport reconciliation_report(const Signature& mu, int n, int anchor) {
  require_audit_signature(mu, n);
  if (!mu.is_pole(anchor)) throw Error(Errc::anchor_not_pole, "marking " + std::to_string(anchor) + " is not a pole");
  ReconciliationReport rep;
  rep.n = n;
  rep.mu = mu;
  rep.anchor = anchor;
  rep.columns = kept_generators(mu, n);

  const auto formula = reduced_row(to_kapranov(dmu_class(mu, anchor)), rep.columns);
  if (mu == fixture_signature()) {
    const RatMatrix fixture = builtin_fixture(kRankFixture);
    rep.reference.assign(fixture.row(0).begin(), fixture.row(0).end());
    rep.reference_source = "fixture";
  } else {
    rep.reference = formula;
    rep.reference_source = "hyperplane-formula";
  }

  auto add = [&](std::string name, std::vector<Rational> row) {
    auto diff = subtract(row, rep.reference);
    rep.candidates.push_back({std::move(name), std::move(row), std::move(diff)});
  };
  add("hyperplane-formula", formula);
  add("xi-unit", reduced_row(to_kapranov(xi_pushforward(mu, anchor, PushforwardMode::unit)), rep.columns));
  add("xi-kappa-weighted",
      reduced_row(to_kapranov(xi_pushforward(mu, anchor, PushforwardMode::kappa_weighted)), rep.columns));

  for (int p : mu.poles())
    rep.anchor_rows.push_back({p, reduced_row(to_kapranov(dmu_class(mu, p)), rep.columns)});
  for (std::size_t i = 0; i < rep.anchor_rows.size(); ++i)
    for (std::size_t j = i + 1; j < rep.anchor_rows.size(); ++j)
      rep.anchor_differences.push_back({rep.anchor_rows[i].anchor, rep.anchor_rows[j].anchor,
                                        subtract(rep.anchor_rows[i].row, rep.anchor_rows[j].row)});
  return rep;
}

}  // namespace rescone
