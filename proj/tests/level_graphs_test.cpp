#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "rescone/level_graphs.hpp"
#include "support.hpp"

using namespace rescone;

namespace {

const Signature& mu22() {
  static const Signature mu = Signature::validate({2, 2, -1, -1, -1, -1, -1, -1});
  return mu;
}

// Pairwise compatible families of canonical splits, counted by size. A family
// of k compatible splits is the edge set of exactly one stable tree with k+1
// vertices.
std::map<int, long> split_family_counts(int n) {
  std::vector<std::uint32_t> splits;
  for (const auto& b : enumerate_boundary(n)) splits.push_back(b.members().bits());
  const std::uint32_t all = (1U << n) - 1;
  auto compatible = [all](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t ac = all & ~a, bc = all & ~b;
    return !(a & b) || !(a & bc) || !(ac & b) || !(ac & bc);
  };
  std::map<int, long> counts;
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    ++counts[static_cast<int>(chosen.size()) + 1];
    for (std::size_t i = start; i < splits.size(); ++i) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) { return compatible(c, splits[i]); }))
        continue;
      chosen.push_back(splits[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return counts;
}

int sum_over(const Signature& mu, const MarkingSet& s) {
  int t = 0;
  for (int i : s.elements()) t += mu.order(i);
  return t;
}

}  // namespace

TEST(StableTrees, TotalCountsAreSchroederNumbers) {
  const long expected[] = {1, 4, 26, 236, 2752, 39208};
  for (int n = 3; n <= 8; ++n)
    EXPECT_EQ(static_cast<long>(enumerate_stable_trees(n, n - 2).size()), expected[n - 3]) << n;
}

TEST(StableTrees, CountsByVertexNumberMatchSplitOracle) {
  for (int n = 4; n <= 7; ++n) {
    std::map<int, long> got;
    for (const auto& t : enumerate_stable_trees(n, n - 2)) ++got[t.vertex_count()];
    EXPECT_EQ(got, split_family_counts(n)) << n;
  }
}

TEST(StableTrees, EdgeSplitsAreDistinctAcrossTrees) {
  // Each tree is recovered from its set of splits, so the split sets are pairwise distinct.
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& t : enumerate_stable_trees(7, 5)) {
    std::vector<std::uint32_t> s;
    for (int e = 0; e < t.edge_count(); ++e)
      s.push_back(canonicalize(t.branch(e, t.edges()[e].a), 7).members().bits());
    std::sort(s.begin(), s.end());
    EXPECT_TRUE(seen.insert(s).second);
  }
}

TEST(StableTrees, RejectsUnstableOrMalformedTrees) {
  EXPECT_ERRC(StableTree::make(4, {{1}, {2, 3, 4}}, {{0, 1}}), Errc::invalid_tree);
  EXPECT_ERRC(StableTree::make(4, {{1, 2}, {3, 4}}, {}), Errc::invalid_tree);
  EXPECT_ERRC(StableTree::make(5, {{1, 2}, {2, 3, 4, 5}}, {{0, 1}}), Errc::invalid_tree);
  EXPECT_ERRC(StableTree::make(6, {{1, 2}, {3, 4}, {5, 6}}, {{0, 1}, {1, 2}, {2, 0}}), Errc::invalid_tree);
}

TEST(TwoLevel, ZerosBelowGiveKappaFive) {
  const auto gs = two_level_structures(StableTree::two_vertex(8, {1, 2}), mu22());
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].legs_below_top(), MarkingSet({1, 2}));
  EXPECT_EQ(gs[0].kappa(0), 5);
}

TEST(TwoLevel, BalancedSplitIsHorizontal) {
  const auto gs = two_level_structures(StableTree::two_vertex(8, {1, 3, 4, 5}), mu22());
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].depth(), 0);
  EXPECT_TRUE(gs[0].is_horizontal(0));
  EXPECT_EQ(gs[0].kappa(0), 0);
}

TEST(TwoLevel, OneZeroTwoPolesBelow) {
  const auto gs = two_level_structures(StableTree::two_vertex(8, {1, 3, 4}), mu22());
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].legs_below_top(), MarkingSet({1, 3, 4}));
  EXPECT_EQ(gs[0].kappa(0), 1);
}

TEST(TwoLevel, SignatureLengthMustMatch) {
  EXPECT_ERRC(two_level_structures(StableTree::two_vertex(6, {1, 2}), mu22()), Errc::signature_mismatch);
}

TEST(Ell, LcmOfVerticalKappa) {
  const auto tree = StableTree::make(5, {{1}, {2, 3}, {4, 5}}, {{0, 1}, {0, 2}});
  EXPECT_EQ(ell_gamma(EnhancedLevelGraph(tree, {0, -1, -1}, {2, 3})), 6);
  EXPECT_EQ(ell_gamma(EnhancedLevelGraph(tree, {0, -1, -1}, {4, 4})), 4);
  EXPECT_EQ(ell_gamma(EnhancedLevelGraph(StableTree::two_vertex(8, {1, 2}), {-1, 0}, {5})), 5);
  EXPECT_ERRC(ell_gamma(EnhancedLevelGraph(StableTree::two_vertex(8, {1, 2}), {0, 0}, {0})), Errc::undefined_ell);
}

TEST(TwoLevel, TwoVertexCountMatchesSubsetOracle) {
  // bottom side B, 2 <= |B| <= n-2, kappa = sum_B m + 1 > 0
  for (const auto& entries : std::vector<std::vector<int>>{{2, 2, -1, -1, -1, -1, -1, -1}, {1, 1, -1, -1, -1, -1},
                                                           {3, 1, -2, -1, -1, -1, -1}, {2, 1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const int n = mu.n();
    long expected = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      const auto b = MarkingSet::from_bits(mask);
      if (b.size() >= 2 && b.size() <= n - 2 && sum_over(mu, b) + 1 > 0) ++expected;
    }
    const auto gs = enumerate_two_level(mu, {2, 2, false});
    EXPECT_EQ(static_cast<long>(gs.size()), expected) << mu.str();
    for (const auto& g : gs) {
      const auto bottom = g.legs_below_top();
      EXPECT_EQ(g.kappa(0), sum_over(mu, bottom) + 1);
    }
  }
}

TEST(TwoLevelProperty, FullEnumerationInvariants) {
  const auto gs = enumerate_two_level(mu22(), {2, 6, false});
  ASSERT_FALSE(gs.empty());
  std::set<CanonicalForm> forms;
  int multi = 0;
  for (const auto& g : gs) {
    ASSERT_TRUE(g.is_valid(mu22()));
    ASSERT_EQ(g.depth(), 1);
    for (int v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(g.vertex_degree(v, mu22()), -2);
    for (int e = 0; e < g.tree().edge_count(); ++e) {
      ASSERT_FALSE(g.is_horizontal(e));
      ASSERT_GE(g.kappa(e), 1);
    }
    ASSERT_GE(poles_on_top(g, mu22()), 2);
    if (g.vertex_count() >= 3) {
      ++multi;
      ASSERT_FALSE(dominates_residue_space(g, mu22()));
    }
    ASSERT_TRUE(forms.insert(canonical_form(g)).second);
  }
  EXPECT_GT(multi, 0);
}

TEST(TwoLevelProperty, HorizontalEnumerationStaysValid) {
  for (const auto& g : enumerate_two_level(Signature::validate({1, 1, -1, -1, -1, -1}), {2, 4, true})) {
    ASSERT_TRUE(g.is_valid(Signature::validate({1, 1, -1, -1, -1, -1})));
    for (int e = 0; e < g.tree().edge_count(); ++e) ASSERT_EQ(g.is_horizontal(e), g.kappa(e) == 0);
  }
}

TEST(CanonicalForm, InvariantUnderVertexRelabeling) {
  rescone::testing::Rng rng(314);
  const auto gs = enumerate_two_level(mu22(), {3, 5, false});
  ASSERT_FALSE(gs.empty());
  for (std::size_t i = 0; i < gs.size(); i += 7) {
    const auto& g = gs[i];
    const int nv = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(nv));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MarkingSet> legs(perm.size());
    std::vector<int> levels(perm.size());
    for (int v = 0; v < nv; ++v) {
      legs[perm[v]] = g.tree().legs()[v];
      levels[perm[v]] = g.level(v);
    }
    std::vector<Edge> edges;
    std::vector<int> kappa;
    for (int e = g.tree().edge_count() - 1; e >= 0; --e) {
      const auto& ed = g.tree().edges()[e];
      edges.push_back({perm[ed.b], perm[ed.a]});
      kappa.push_back(g.kappa(e));
    }
    const EnhancedLevelGraph h(StableTree::make(8, legs, edges), levels, kappa);
    ASSERT_TRUE(h.is_valid(mu22()));
    EXPECT_EQ(canonical_form(h), canonical_form(g));
    EXPECT_EQ(canonical_form(canonicalized(h)), canonical_form(g));
  }
}

TEST(Lg1, TwoVertexGraphsWithAnchorBelow) {
  const auto gs = enumerate_lg1(mu22(), 8, 8, 2);
  bool found = false;
  for (const auto& g : gs) {
    EXPECT_TRUE(g.legs_below_top().contains(8));
    if (g.legs_below_top() == MarkingSet({1, 2, 8})) {
      found = true;
      EXPECT_EQ(g.kappa(0), 4);
    }
    EXPECT_NE(g.legs_below_top(), MarkingSet({3, 8}));
  }
  EXPECT_TRUE(found);

  const auto mu = Signature::validate({1, 1, -1, -1, -1, -1});
  const auto small = enumerate_lg1(mu, 6, 6, 2);
  EXPECT_TRUE(std::any_of(small.begin(), small.end(), [](const EnhancedLevelGraph& g) {
    return g.legs_below_top() == MarkingSet({1, 2, 6}) && g.kappa(0) == 2;
  }));
  EXPECT_ERRC(enumerate_lg1(mu22(), 1, 8, 2), Errc::anchor_not_pole);
}

TEST(Pushforward, TwoVertexModes) {
  const auto g = two_level_structures(StableTree::two_vertex(8, {1, 2}), mu22()).front();
  const auto d12 = Symbol::delta(canonicalize({1, 2}, 8));
  EXPECT_EQ(pushforward_two_vertex(g, PushforwardMode::kappa_weighted).coefficient(d12), Rational(5));
  EXPECT_EQ(pushforward_two_vertex(g, PushforwardMode::unit).coefficient(d12), Rational(1));

  const auto h = two_level_structures(StableTree::two_vertex(8, {1, 3, 4, 5}), mu22()).front();
  const auto dh = Symbol::delta(canonicalize({1, 3, 4, 5}, 8));
  for (auto mode : {PushforwardMode::unit, PushforwardMode::kappa_weighted}) {
    const auto c = pushforward_two_vertex(h, mode);
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.coefficient(dh), Rational(1));
  }
  const auto three = enumerate_two_level(mu22(), {3, 3, false}).front();
  EXPECT_ERRC(pushforward_two_vertex(three, PushforwardMode::unit), Errc::not_two_vertex);
}

TEST(Pushforward, XiMatchesSubsetOracle) {
  for (const auto& entries : std::vector<std::vector<int>>{{2, 2, -1, -1, -1, -1, -1, -1}, {1, 1, -1, -1, -1, -1},
                                                           {1, 2, -1, -1, -1, -1, -1}, {3, 1, 1, -1, -1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const int n = mu.n();
    for (int anchor : mu.poles()) {
      DivisorClass unit(n, Basis::boundary), weighted(n, Basis::boundary);
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        const auto b = MarkingSet::from_bits(mask);
        if (!b.contains(anchor) || b.size() < 2 || b.size() > n - 2) continue;
        const int kappa = sum_over(mu, b) + 1;
        if (kappa <= 0) continue;
        const auto d = Symbol::delta(canonicalize(b, n));
        unit.add(d, kappa);
        weighted.add(d, kappa * kappa);
      }
      EXPECT_EQ(xi_pushforward(mu, anchor, PushforwardMode::unit), unit) << mu.str() << " @" << anchor;
      EXPECT_EQ(xi_pushforward(mu, anchor, PushforwardMode::kappa_weighted), weighted) << mu.str();
    }
  }
}

TEST(Pushforward, XiUnitExampleCoefficients) {
  const auto xi = xi_pushforward(mu22(), 8, PushforwardMode::unit);
  auto coeff = [&](MarkingSet t) { return xi.coefficient(Symbol::delta(canonicalize(t, 8))); };
  EXPECT_EQ(coeff({1, 8}), Rational(2));
  EXPECT_EQ(coeff({2, 8}), Rational(2));
  EXPECT_EQ(coeff({1, 2, 8}), Rational(4));
  EXPECT_EQ(coeff({1, 3, 8}), Rational(1));
  EXPECT_EQ(coeff({1, 2, 3, 8}), Rational(3));
  EXPECT_EQ(coeff({1, 2, 3, 4, 8}), Rational(2));
  EXPECT_EQ(coeff({1, 2, 3, 4, 5, 8}), Rational(1));
  EXPECT_EQ(coeff({3, 8}), Rational(0));

  const auto small = xi_pushforward(Signature::validate({1, 1, -1, -1, -1, -1}), 6, PushforwardMode::unit);
  EXPECT_EQ(small.coefficient(Symbol::delta(canonicalize({1, 2, 6}, 6))), Rational(2));
}

TEST(Dominance, TwoVertexExamples) {
  const auto zeros_below = two_level_structures(StableTree::two_vertex(8, {1, 2}), mu22()).front();
  EXPECT_TRUE(dominates_residue_space(zeros_below, mu22()));
  const auto poles_below = two_level_structures(StableTree::two_vertex(8, {1, 3, 4}), mu22()).front();
  EXPECT_FALSE(dominates_residue_space(poles_below, mu22()));
  const auto horizontal = two_level_structures(StableTree::two_vertex(8, {1, 3, 4, 5}), mu22()).front();
  EXPECT_TRUE(dominates_residue_space(horizontal, mu22()));

  const auto mu = Signature::validate({3, 1, -2, -1, -1, -1, -1});
  const auto g = two_level_structures(StableTree::two_vertex(7, {1, 2}), mu).front();
  EXPECT_ERRC(dominates_residue_space(g, mu), Errc::unsupported_signature);
}
