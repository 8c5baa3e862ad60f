// One line per acceptance criterion: PASS/FAIL, measured time, limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rescone/cone_audit.hpp"
#include "rescone/render.hpp"
#include "support.hpp"

using namespace rescone;
using rescone::testing::Rng;

namespace {

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime limit
  std::function<std::string()> check;  // empty string on success, else the reason
};

const Signature& mu22() {
  static const Signature mu = Signature::validate({2, 2, -1, -1, -1, -1, -1, -1});
  return mu;
}

std::string expect_eq(long got, long want, const char* what) {
  if (got == want) return {};
  return std::string(what) + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

RatMatrix data_fixture() {
  std::ifstream f(std::string(RESCONE_DATA_DIR) + "/rankup-22x22.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

Signature random_simple_signature(Rng& rng) {
  std::uniform_int_distribution<int> zeros_dist(1, 3);
  for (;;) {
    const int zeros = zeros_dist(rng);
    const int budget = 10 - zeros - 2;
    if (budget < zeros) continue;
    const int total = std::uniform_int_distribution<int>(zeros, budget)(rng);
    std::vector<int> e(static_cast<std::size_t>(zeros), 1);
    std::uniform_int_distribution<int> pick(0, zeros - 1);
    for (int extra = total - zeros; extra > 0; --extra) ++e[static_cast<std::size_t>(pick(rng))];
    std::sort(e.rbegin(), e.rend());
    e.insert(e.end(), static_cast<std::size_t>(total + 2), -1);
    return Signature::validate(e);
  }
}

std::vector<Rational> random_points(Rng& rng, int n) {
  std::vector<Rational> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Rational p = testing::random_rational(rng, 50, 7);
    if (p.abs() <= Rational(50) && std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

std::string fixture_reproduction() {
  const RatMatrix expected = data_fixture();
  if (expected.rows() != 22 || expected.cols() != 22) return "data fixture is not 22x22";
  const RatMatrix m = build_audit_matrix(mu22(), 8);
  if (m.rows() != 22 || m.cols() != 22) return "audit matrix is not 22x22";
  for (std::size_t r = 0; r < 22; ++r)
    for (std::size_t c = 0; c < 22; ++c)
      if (m(r, c) != expected(r, c))
        return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") = " + m(r, c).str();
  // rows 2..22 from conversion and reduction
  const auto kept = kept_generators(mu22(), 8);
  const auto rows = contracted_boundary_rows(mu22(), 8);
  if (rows.size() != 21) return "expected 21 contracted rows";
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].coordinates(kept) != RatVector(expected.row(r + 1).begin(), expected.row(r + 1).end()))
      return "converted row " + std::to_string(r + 2) + " differs from the fixture";
  return {};
}

std::string rank_check() {
  return expect_eq(static_cast<long>(rank(build_audit_matrix(mu22(), 8))), 16, "rank");
}

std::string certificate() {
  const auto c = corank_certificate(mu22(), 8);
  for (const auto& e : {expect_eq(c.rho, 99, "rho"), expect_eq(static_cast<long>(c.kept.size()), 22, "kept"),
                        expect_eq(c.killed_count, 77, "killed"),
                        expect_eq(c.contracted_span_rank, 93, "contracted_span_rank"),
                        expect_eq(c.corank, 6, "corank")})
    if (!e.empty()) return e;
  if (c.verdict != Verdict::non_polyhedral_at_ray) return "verdict " + std::string(verdict_name(c.verdict));
  return {};
}

std::string kept() {
  std::vector<KapranovSymbol> expected{Symbol::H(), Symbol::E({2})};
  for (const auto& s : subsets_of_size(MarkingSet::range(3, 8), 3)) expected.push_back(Symbol::E(s));
  const auto got = kept_generators(mu22(), 8);
  if (got == expected) return {};
  std::string names;
  for (const auto& s : got) names += " " + s.name();
  return "kept =" + names;
}

std::string residue_suite() {
  Rng rng(20231);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto mu = random_simple_signature(rng);
    const auto r = residues_at(mu, random_points(rng, mu.n()));
    Rational sum = 0;
    for (const auto& v : r.values()) sum += v;
    if (!sum.is_zero()) return "nonzero residue sum for (" + mu.str() + ")";
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = random_simple_signature(rng);
    const auto pts = random_points(rng, mu.n());
    Rational a = 0;
    while (a.is_zero()) a = testing::random_rational(rng, 9, 4);
    const Rational b = testing::random_rational(rng, 20, 3);
    std::vector<Rational> moved;
    for (const auto& p : pts) moved.push_back(a * p + b);
    const auto r = residues_at(mu, pts), s = residues_at(mu, moved);
    const Rational ratio = s.values()[0] / r.values()[0];
    for (std::size_t k = 0; k < r.size(); ++k)
      if (s.values()[k] != ratio * r.values()[k]) return "projective residues moved under z -> az+b";
  }
  return {};
}

std::string level_graph_suite() {
  const auto gs = enumerate_two_level(mu22(), {2, 6, false});
  if (gs.empty()) return "empty enumeration";
  for (const auto& g : gs) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.vertex_degree(v, mu22()) != -2) return "vertex equation fails";
    if (!g.is_valid(mu22())) return "invalid enhanced structure emitted";
    if (poles_on_top(g, mu22()) < 2) return "graph with fewer than two poles on top";
    if (g.vertex_count() >= 3 && dominates_residue_space(g, mu22())) return "graph with >= 3 vertices dominates";
  }
  return {};
}

std::string components() {
  const std::pair<std::vector<int>, int> cases[] = {
      {{2, 2, -1, -1, -1, -1, -1, -1}, 2}, {{3, 3, -3, -1, -1}, 3}, {{1, 1, -1, -1, -1, -1}, 1}};
  std::string reasons;
  for (const auto& [entries, want] : cases) {
    std::string reason;
    try {
      const auto mu = Signature::validate(entries);
      reason = expect_eq(fiber_components(mu), want, ("(" + mu.str() + ")").c_str());
    } catch (const Error& e) {
      reason = e.what();
    }
    if (!reason.empty()) reasons += (reasons.empty() ? "" : "; ") + reason;
  }
  return reasons;
}

std::string monodromy() {
  const auto hs = resonance_hyperplanes(6);
  if (hs.size() != 31) return "expected 31 hyperplanes";
  for (const auto& h : hs) {
    const int want = (h.size() == 1 || h.size() == 5) ? -1 : 1;
    if (monodromy_sign(mu22(), h) != want) return "wrong sign on a hyperplane of size " + std::to_string(h.size());
  }
  return {};
}

std::string seven_markings() {
  for (const auto& entries : {std::vector<int>{1, 2, -1, -1, -1, -1, -1}, std::vector<int>{2, 1, -1, -1, -1, -1, -1}}) {
    const auto mu = Signature::validate(entries);
    const auto c = corank_certificate(mu, 7);
    if (c.corank != 1 || c.verdict != Verdict::polyhedral_at_ray)
      return "(" + mu.str() + "): corank " + std::to_string(c.corank) + ", " + std::string(verdict_name(c.verdict));
  }
  return {};
}

std::string reconciliation() {
  const auto a = render(reconciliation_report(mu22(), 8, 8), Format::json);
  const auto b = render(reconciliation_report(mu22(), 8, 8), Format::json);
  if (a != b) return "report is not deterministic";
  const auto j = nlohmann::json::parse(a);
  const RatMatrix fixture = data_fixture();
  const auto fixture_row = fixture.row(0);
  if (j.at("reference").size() != 22) return "reference row length";
  for (std::size_t k = 0; k < 22; ++k)
    if (Rational(j["reference"][k].get<long>()) != fixture_row[k]) return "reference is not the fixture row";
  const std::vector<std::string> names{"hyperplane-formula", "xi-unit", "xi-kappa-weighted"};
  if (j.at("candidates").size() != 3) return "expected three candidates";
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& c = j["candidates"][i];
    if (c.at("name") != names[i]) return "candidate name " + c["name"].dump();
    if (c.at("row").size() != 22 || c.at("difference").size() != 22) return "candidate vector length";
    for (std::size_t k = 0; k < 22; ++k)
      if (c["row"][k].get<long>() - c["difference"][k].get<long>() != j["reference"][k].get<long>())
        return "difference is not row - reference";
  }
  const auto& rows = j.at("anchor_independence").at("rows");
  if (rows.size() != 6) return "expected anchors 3..8";
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].at("anchor") != static_cast<int>(i) + 3 || rows[i].at("row").size() != 22) return "anchor row shape";
  if (j["anchor_independence"].at("differences").size() != 15) return "expected 15 pairwise differences";
  return {};
}

std::string counting() {
  for (const auto& e : {expect_eq(static_cast<long>(enumerate_boundary(8).size()), 119, "boundary(8)"),
                        expect_eq(static_cast<long>(kapranov_basis(8).size()), 99, "kapranov_basis(8)"),
                        expect_eq(static_cast<long>(resonance_hyperplanes(6).size()), 31, "resonance_hyperplanes(6)"),
                        expect_eq(static_cast<long>(kernel_basis(data_fixture()).size()), 6, "kernel dimension")})
    if (!e.empty()) return e;
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "audit matrix reproduces the 22x22 fixture", 5.0, fixture_reproduction},
      {2, "audit matrix rank is 16", 1.0, rank_check},
      {3, "corank certificate for (2,2,-1^6)", 0, certificate},
      {4, "kept generators from the dominance criterion", 0, kept},
      {5, "residue theorem and affine invariance suite", 10.0, residue_suite},
      {6, "two-level graph invariants up to 6 vertices", 60.0, level_graph_suite},
      {7, "connected component classifier", 0, components},
      {8, "monodromy sign rule over 31 hyperplanes", 0, monodromy},
      {9, "n=7 certificates have corank 1", 0, seven_markings},
      {10, "reconciliation report shape and determinism", 60.0, reconciliation},
      {11, "counting suite", 0, counting},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.check();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds) reason = "over time limit";
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.3fs < %.0fs", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::printf("%s criterion %2d: %s [%s]%s%s\n", reason.empty() ? "PASS" : "FAIL", c.id, c.name, timing,
                reason.empty() ? "" : " ", reason.c_str());
    failed += !reason.empty();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
