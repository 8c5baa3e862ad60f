#include <gtest/gtest.h>

#include "rescone/cone_audit.hpp"
#include "rescone/fixtures.hpp"
#include "support.hpp"

using namespace rescone;

namespace {

const Signature& mu22() {
  static const Signature mu = Signature::validate({2, 2, -1, -1, -1, -1, -1, -1});
  return mu;
}

// A two-vertex boundary divisor dominates exactly when it is horizontal
// (each side of order sum -1) or vertical with a pole-free lower side.
bool two_vertex_dominates(const Signature& mu, const MarkingSet& a) {
  const MarkingSet b = a.complement(mu.n());
  if (mu.weight(a) == -1) return true;
  for (const auto& bottom : {a, b})
    if (mu.weight(bottom) + 1 > 0 && !bottom.intersects(mu.pole_set())) return true;
  return false;
}

std::vector<KapranovSymbol> kept_oracle(const Signature& mu, int n) {
  std::vector<KapranovSymbol> out{Symbol::H()};
  for (const auto& s : kapranov_basis(n))
    if (s.kind == SymbolKind::E && two_vertex_dominates(mu, s.set.with(1))) out.push_back(s);
  return out;
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Kept, EightMarkingsPrintedSet) {
  std::vector<KapranovSymbol> expected{Symbol::H(), Symbol::E({2})};
  for (const auto& s : subsets_of_size(MarkingSet::range(3, 8), 3)) expected.push_back(Symbol::E(s));
  const auto kept = kept_generators(mu22(), 8);
  EXPECT_EQ(kept, expected);
  EXPECT_EQ(std::count(kept.begin(), kept.end(), Symbol::E({4, 5})), 0);
  EXPECT_EQ(std::count(kept.begin(), kept.end(), Symbol::E({3})), 0);
}

TEST(Kept, MatchesTwoVertexOracle) {
  for (const auto& entries : std::vector<std::vector<int>>{{2, 2, -1, -1, -1, -1, -1, -1}, {1, 2, -1, -1, -1, -1, -1},
                                                           {2, 1, -1, -1, -1, -1, -1}, {1, 1, -1, -1, -1, -1},
                                                           {3, -1, -1, -1, -1, -1}, {1, 1, 1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    EXPECT_EQ(kept_generators(mu, mu.n()), kept_oracle(mu, mu.n())) << mu.str();
  }
}

TEST(Kept, UnsupportedShapes) {
  EXPECT_ERRC(kept_generators(Signature::validate({3, 1, -2, -1, -1, -1, -1}), 7), Errc::unsupported_signature);
  EXPECT_ERRC(kept_generators(Signature::validate({1, 1, 1, 1, -1, -1, -1, -1, -1, -1}), 10),
              Errc::unsupported_signature);
  EXPECT_ERRC(kept_generators(mu22(), 9), Errc::signature_mismatch);
}

TEST(ContractedRows, PrintedRows) {
  const auto pairs = contracted_pairs(mu22(), 8);
  ASSERT_EQ(pairs.size(), 21u);
  EXPECT_EQ(pairs.front(), MarkingSet({3, 4}));
  EXPECT_EQ(pairs[15], MarkingSet({2, 3}));
  EXPECT_EQ(pairs.back(), MarkingSet({2, 8}));

  const auto kept = kept_generators(mu22(), 8);
  const auto rows = contracted_boundary_rows(mu22(), 8);
  EXPECT_EQ(rows.front().coordinates(kept),
            ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1}));
  EXPECT_EQ(rows[15].coordinates(kept), ints({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
  EXPECT_EQ(rows.back().coordinates(kept), ints({1, 0, -1, -1, -1, 0, -1, -1, 0, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1, 0, 0, 0}));
  for (const auto& r : rows) EXPECT_EQ(r.coefficient(Symbol::H()), Rational(1));
}

TEST(AuditMatrix, ReproducesFixture) {
  DmuSource source{};
  const auto m = build_audit_matrix(mu22(), 8, source);
  EXPECT_EQ(source, DmuSource::fixture);
  EXPECT_EQ(m, builtin_fixture(kRankFixture));
  EXPECT_EQ(rank(m), 16u);
  EXPECT_EQ(kernel_basis(m).size(), 6u);
  // rows 2..22 come from conversion code
  const auto kept = kept_generators(mu22(), 8);
  const auto rows = contracted_boundary_rows(mu22(), 8);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto coords = rows[r].coordinates(kept);
    EXPECT_EQ(RatVector(m.row(r + 1).begin(), m.row(r + 1).end()), coords) << r;
  }
}

TEST(AuditMatrix, FormulaRowForOtherSignatures) {
  const auto mu = Signature::validate({1, 2, -1, -1, -1, -1, -1});
  DmuSource source{};
  const auto m = build_audit_matrix(mu, 7, source);
  EXPECT_EQ(source, DmuSource::hyperplane_formula);
  const auto kept = kept_generators(mu, 7);
  EXPECT_EQ(RatVector(m.row(0).begin(), m.row(0).end()), reduced_dmu_row(mu, 7, 7).coordinates(kept));
  EXPECT_EQ(m.cols(), kept.size());
}

TEST(Certificate, EightMarkings) {
  const auto c = corank_certificate(mu22(), 8);
  EXPECT_EQ(c.rho, 99);
  EXPECT_EQ(c.kept.size(), 22u);
  EXPECT_EQ(c.killed_count, 77);
  EXPECT_EQ(c.matrix_rank, 16);
  EXPECT_EQ(c.contracted_span_rank, 93);
  EXPECT_EQ(c.corank, 6);
  EXPECT_EQ(c.verdict, Verdict::non_polyhedral_at_ray);
  EXPECT_EQ(c.boundary_rows_rank, 16);
  EXPECT_EQ(c.dmu_source, DmuSource::fixture);
}

TEST(Certificate, SevenMarkings) {
  for (const auto& entries : std::vector<std::vector<int>>{{1, 2, -1, -1, -1, -1, -1}, {2, 1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const auto c = corank_certificate(mu, 7);
    EXPECT_EQ(c.rho, 42);
    EXPECT_EQ(c.killed_count + static_cast<int>(c.kept.size()), c.rho);
    EXPECT_EQ(c.contracted_span_rank, c.killed_count + c.matrix_rank);
    EXPECT_EQ(c.corank, 1) << mu.str();
    EXPECT_EQ(c.verdict, Verdict::polyhedral_at_ray);
    EXPECT_LE(c.boundary_rows_rank, c.matrix_rank);
  }
}

TEST(CertificateProperty, InternalArithmetic) {
  for (const auto& entries : std::vector<std::vector<int>>{{1, 1, -1, -1, -1, -1}, {3, -1, -1, -1, -1, -1},
                                                           {2, 2, -1, -1, -1, -1, -1, -1}, {3, 1, -1, -1, -1, -1, -1, -1},
                                                           {1, 1, 1, -1, -1, -1, -1, -1}, {2, 1, 1, -1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const auto c = corank_certificate(mu, mu.n());
    EXPECT_EQ(c.killed_count + static_cast<int>(c.kept.size()), c.rho);
    EXPECT_EQ(c.corank, c.rho - c.contracted_span_rank);
    if (mu.zero_count() >= 2) EXPECT_GE(c.corank, 1) << mu.str();
    EXPECT_GE(c.corank, 0);
    EXPECT_EQ(c.verdict == Verdict::non_polyhedral_at_ray, c.corank >= 2);
    EXPECT_LE(c.boundary_rows_rank, c.matrix_rank);
    EXPECT_EQ(rank(c.matrix), static_cast<std::size_t>(c.matrix_rank));
  }
}

TEST(Certificate, SingleZeroHasNothingToKeep) {
  // With one zero the residue map is generically finite: no exceptional
  // divisor dominates, H is the only kept column and the corank is 0.
  for (const auto& entries : std::vector<std::vector<int>>{{2, -1, -1, -1, -1}, {3, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const auto c = corank_certificate(mu, mu.n());
    EXPECT_EQ(c.kept, std::vector<KapranovSymbol>{Symbol::H()});
    EXPECT_EQ(c.matrix_rank, 1);
    EXPECT_EQ(c.corank, 0);
    EXPECT_EQ(c.verdict, Verdict::polyhedral_at_ray);
  }
}

TEST(Certificate, RejectsBadInput) {
  EXPECT_ERRC(corank_certificate(Signature::validate({1, -1, -1, -1}), 4), Errc::invalid_marking_count);
  EXPECT_ERRC(corank_certificate(Signature::validate({3, 1, -2, -1, -1, -1, -1}), 7), Errc::unsupported_signature);
}

TEST(Reconciliation, EightMarkingsShape) {
  const auto r = reconciliation_report(mu22(), 8, 8);
  EXPECT_EQ(r.reference_source, "fixture");
  EXPECT_EQ(r.reference, ints({12, -10, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3, -3}));
  ASSERT_EQ(r.candidates.size(), 3u);
  EXPECT_EQ(r.candidates[0].name, "hyperplane-formula");
  EXPECT_EQ(r.candidates[1].name, "xi-unit");
  EXPECT_EQ(r.candidates[2].name, "xi-kappa-weighted");
  for (const auto& c : r.candidates) {
    ASSERT_EQ(c.row.size(), 22u);
    for (std::size_t k = 0; k < 22; ++k) EXPECT_EQ(c.difference[k], c.row[k] - r.reference[k]);
  }
  EXPECT_EQ(r.candidates[0].row, reduced_dmu_row(mu22(), 8, 8).coordinates(r.columns));
  ASSERT_EQ(r.anchor_rows.size(), 6u);
  for (std::size_t i = 0; i < r.anchor_rows.size(); ++i) EXPECT_EQ(r.anchor_rows[i].anchor, static_cast<int>(i) + 3);
  EXPECT_EQ(r.anchor_differences.size(), 15u);
}

TEST(Reconciliation, SixMarkingsShape) {
  const auto mu = Signature::validate({1, 1, -1, -1, -1, -1});
  const auto r = reconciliation_report(mu, 6, 6);
  EXPECT_EQ(r.reference_source, "hyperplane-formula");
  EXPECT_EQ(r.candidates.size(), 3u);
  EXPECT_EQ(r.anchor_rows.size(), 4u);
  EXPECT_EQ(r.anchor_differences.size(), 6u);
  for (const auto& c : r.candidates) EXPECT_EQ(c.row.size(), r.columns.size());
  EXPECT_ERRC(reconciliation_report(mu, 6, 1), Errc::anchor_not_pole);
}
