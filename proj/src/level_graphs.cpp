#include "rescone/level_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rescone/error.hpp"
#include "rescone/matrix.hpp"

namespace rescone {

// ---------------------------------------------------------------- StableTree

StableTree StableTree::make(int n, std::vector<MarkingSet> legs, std::vector<Edge> edges) {
  const int v = static_cast<int>(legs.size());
  if (n < 3 || n > kMaxMarkings) throw Error(Errc::invalid_tree, "n = " + std::to_string(n));
  if (v == 0) throw Error(Errc::invalid_tree, "no vertices");
  if (static_cast<int>(edges.size()) != v - 1) throw Error(Errc::invalid_tree, "a tree needs |E| = |V| - 1");

  MarkingSet seen;
  for (const auto& l : legs) {
    if (l.intersects(seen)) throw Error(Errc::invalid_tree, "leg sets overlap");
    seen = seen | l;
  }
  if (seen != MarkingSet::range(1, n)) throw Error(Errc::invalid_tree, "leg sets do not cover {1..n}");

  for (auto& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= v || e.b >= v || e.a == e.b)
      throw Error(Errc::invalid_tree, "bad edge endpoints");
  }
  // Connectivity (with |E| = |V| - 1 this also rules out cycles).
  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.a)] = find(e.b);
  for (int i = 0; i < v; ++i)
    if (find(i) != find(0)) throw Error(Errc::invalid_tree, "graph is not connected");

  StableTree t;
  t.n_ = n;
  t.legs_ = std::move(legs);
  t.edges_ = std::move(edges);
  for (int i = 0; i < v; ++i)
    if (t.valence(i) < 3) throw Error(Errc::invalid_tree, "vertex " + std::to_string(i) + " is unstable");
  return t;
}

StableTree StableTree::two_vertex(int n, const MarkingSet& side) {
  return make(n, {side, side.complement(n)}, {{0, 1}});
}

int StableTree::valence(int v) const {
  int val = legs_.at(static_cast<std::size_t>(v)).size();
  for (const auto& e : edges_) val += (e.a == v) + (e.b == v);
  return val;
}

std::vector<int> StableTree::incident(int v) const {
  std::vector<int> out;
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i].a == v || edges_[i].b == v) out.push_back(i);
  return out;
}

MarkingSet StableTree::branch(int e, int from) const {
  MarkingSet out;
  std::vector<int> stack{from};
  std::vector<bool> seen(legs_.size(), false);
  seen[from] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    out = out | legs_[x];
    for (int i = 0; i < edge_count(); ++i) {
      if (i == e) continue;
      const auto& ed = edges_[i];
      int y = -1;
      if (ed.a == x) y = ed.b;
      else if (ed.b == x) y = ed.a;
      if (y >= 0 && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return out;
}

namespace {

struct RawTree {
  std::vector<MarkingSet> legs;
  std::vector<Edge> edges;
};

}  // namespace

std::vector<StableTree> enumerate_stable_trees(int n, int max_vertices) {
  if (n < 3 || n > kMaxMarkings) throw Error(Errc::invalid_marking_count, "n = " + std::to_string(n));
  // Every stable tree on legs {1..k} arises exactly once from a tree on
  // {1..k-1} by putting leg k on a vertex, on a new vertex subdividing an
  // edge, or on a new vertex together with an existing leg j.
  std::vector<RawTree> current{{{MarkingSet{1, 2, 3}}, {}}};
  for (int k = 4; k <= n; ++k) {
    std::vector<RawTree> next;
    for (const auto& t : current) {
      const int v = static_cast<int>(t.legs.size());
      for (int i = 0; i < v; ++i) {
        RawTree u = t;
        u.legs[i] = u.legs[i].with(k);
        next.push_back(std::move(u));
      }
      if (v + 1 > max_vertices) continue;
      for (std::size_t e = 0; e < t.edges.size(); ++e) {
        RawTree u = t;
        const Edge old = u.edges[e];
        u.legs.push_back(MarkingSet{k});
        u.edges[e] = {old.a, v};
        u.edges.push_back({v, old.b});
        next.push_back(std::move(u));
      }
      for (int i = 0; i < v; ++i) {
        for (int j : t.legs[i].elements()) {
          RawTree u = t;
          u.legs[i] = u.legs[i].without(j);
          u.legs.push_back(MarkingSet{j, k});
          u.edges.push_back({i, v});
          next.push_back(std::move(u));
        }
      }
    }
    current = std::move(next);
  }
  std::vector<StableTree> out;
  out.reserve(current.size());
  for (auto& t : current)
    if (static_cast<int>(t.legs.size()) <= max_vertices)
      out.push_back(StableTree::make(n, std::move(t.legs), std::move(t.edges)));
  return out;
}

// ------------------------------------------------------- EnhancedLevelGraph

EnhancedLevelGraph::EnhancedLevelGraph(StableTree tree, std::vector<int> levels, std::vector<int> kappa)
    : tree_(std::move(tree)), levels_(std::move(levels)), kappa_(std::move(kappa)) {
  if (static_cast<int>(levels_.size()) != tree_.vertex_count() ||
      static_cast<int>(kappa_.size()) != tree_.edge_count())
    throw Error(Errc::invalid_tree, "level or kappa vector has the wrong length");
}

int EnhancedLevelGraph::depth() const { return -*std::min_element(levels_.begin(), levels_.end()); }

bool EnhancedLevelGraph::is_horizontal(int e) const {
  const auto& ed = tree_.edges().at(static_cast<std::size_t>(e));
  return level(ed.a) == level(ed.b);
}

int EnhancedLevelGraph::vertical_edge_count() const {
  int c = 0;
  for (int e = 0; e < tree_.edge_count(); ++e) c += !is_horizontal(e);
  return c;
}

int EnhancedLevelGraph::horizontal_edge_count() const { return tree_.edge_count() - vertical_edge_count(); }

int EnhancedLevelGraph::lower_end(int e) const {
  const auto& ed = tree_.edges().at(static_cast<std::size_t>(e));
  return level(ed.a) < level(ed.b) ? ed.a : ed.b;
}

MarkingSet EnhancedLevelGraph::legs_on_level(int lvl) const {
  MarkingSet s;
  for (int v = 0; v < vertex_count(); ++v)
    if (level(v) == lvl) s = s | tree_.legs()[v];
  return s;
}

MarkingSet EnhancedLevelGraph::legs_below_top() const {
  MarkingSet s;
  for (int v = 0; v < vertex_count(); ++v)
    if (level(v) < 0) s = s | tree_.legs()[v];
  return s;
}

int EnhancedLevelGraph::vertex_degree(int v, const Signature& mu) const {
  int d = mu.weight(tree_.legs()[v]);
  for (int e : tree_.incident(v)) {
    const auto& ed = tree_.edges()[e];
    const int other = ed.a == v ? ed.b : ed.a;
    if (level(other) == level(v)) d -= 1;
    else if (level(other) > level(v)) d -= kappa(e) + 1;
    else d += kappa(e) - 1;
  }
  return d;
}

std::vector<std::string> EnhancedLevelGraph::violations(const Signature& mu) const {
  std::vector<std::string> out;
  if (mu.n() != tree_.n()) {
    out.push_back("signature length differs from leg count");
    return out;
  }
  std::set<int> used(levels_.begin(), levels_.end());
  const int lowest = *used.begin();
  if (*used.rbegin() != 0 || static_cast<int>(used.size()) != 1 - lowest)
    out.push_back("level map is not onto {0, -1, ..., -L}");
  for (int e = 0; e < tree_.edge_count(); ++e) {
    if (is_horizontal(e) && kappa(e) != 0) out.push_back("horizontal edge " + std::to_string(e) + " has kappa != 0");
    if (!is_horizontal(e) && kappa(e) <= 0)
      out.push_back("vertical edge " + std::to_string(e) + " has kappa <= 0");
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_degree(v, mu) != -2) out.push_back("vertex equation fails at vertex " + std::to_string(v));
  return out;
}

std::optional<std::vector<int>> solve_enhancement(const StableTree& tree, const std::vector<int>& levels,
                                                  const Signature& mu) {
  const int nv = tree.vertex_count(), ne = tree.edge_count();
  std::vector<int> kappa(static_cast<std::size_t>(ne), 0);
  std::vector<bool> resolved(static_cast<std::size_t>(ne), false);
  std::vector<int> open(static_cast<std::size_t>(nv), 0);
  for (int e = 0; e < ne; ++e) {
    const auto& ed = tree.edges()[e];
    if (levels[ed.a] == levels[ed.b]) {
      resolved[e] = true;
    } else {
      ++open[ed.a];
      ++open[ed.b];
    }
  }
  auto partial_degree = [&](int v) {
    int d = mu.weight(tree.legs()[v]);
    for (int e : tree.incident(v)) {
      if (!resolved[e]) continue;
      const auto& ed = tree.edges()[e];
      const int other = ed.a == v ? ed.b : ed.a;
      if (levels[other] == levels[v]) d -= 1;
      else if (levels[other] > levels[v]) d -= kappa[e] + 1;
      else d += kappa[e] - 1;
    }
    return d;
  };
  // Peel leaves of the forest of vertical edges; each peel forces one kappa.
  std::vector<int> stack;
  for (int v = 0; v < nv; ++v)
    if (open[v] == 1) stack.push_back(v);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (open[v] != 1) continue;
    int e = -1;
    for (int i : tree.incident(v))
      if (!resolved[i]) e = i;
    const auto& ed = tree.edges()[e];
    const int other = ed.a == v ? ed.b : ed.a;
    const int rest = partial_degree(v);
    // top end contributes kappa - 1, bottom end -(kappa + 1); total must be -2
    const int k = levels[v] > levels[other] ? -1 - rest : rest + 1;
    if (k <= 0) return std::nullopt;
    kappa[e] = k;
    resolved[e] = true;
    --open[v];
    if (--open[other] == 1) stack.push_back(other);
  }
  EnhancedLevelGraph g(tree, levels, kappa);
  for (int v = 0; v < nv; ++v)
    if (g.vertex_degree(v, mu) != -2) return std::nullopt;
  return kappa;
}

std::vector<EnhancedLevelGraph> two_level_structures(const StableTree& tree, const Signature& mu) {
  if (mu.n() != tree.n())
    throw Error(Errc::signature_mismatch, "signature has " + std::to_string(mu.n()) + " entries, tree has " +
                                              std::to_string(tree.n()) + " legs");
  const int nv = tree.vertex_count();
  std::vector<EnhancedLevelGraph> out;
  // mask 0 is the single-level structure; the all-ones mask is not onto {0}
  for (std::uint32_t mask = 0; mask <= (1U << nv) - 2U; ++mask) {
    std::vector<int> levels(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) levels[v] = ((mask >> v) & 1U) ? -1 : 0;
    if (auto kappa = solve_enhancement(tree, levels, mu)) {
      EnhancedLevelGraph g(tree, levels, *kappa);
      if (!g.is_valid(mu)) throw Error(Errc::invalid_tree, "solver produced an invalid enhancement");
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::int64_t ell_gamma(const EnhancedLevelGraph& g) {
  std::int64_t l = 0;
  for (int e = 0; e < g.tree().edge_count(); ++e) {
    if (g.is_horizontal(e)) continue;
    l = l == 0 ? g.kappa(e) : std::lcm(l, static_cast<std::int64_t>(g.kappa(e)));
  }
  if (l == 0) throw Error(Errc::undefined_ell, "graph has no vertical edge");
  return l;
}

// ----------------------------------------------------------- canonical form

namespace {

using VertexKey = std::tuple<int, MarkingSet, std::vector<MarkingSet>>;

std::vector<int> canonical_order(const EnhancedLevelGraph& g) {
  const auto& t = g.tree();
  std::vector<VertexKey> keys;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<MarkingSet> branches;
    for (int e : t.incident(v)) {
      const auto& ed = t.edges()[e];
      branches.push_back(t.branch(e, ed.a == v ? ed.b : ed.a));
    }
    std::sort(branches.begin(), branches.end());
    keys.emplace_back(-g.level(v), t.legs()[v], std::move(branches));
  }
  std::vector<int> order(static_cast<std::size_t>(t.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  return order;
}

}  // namespace

CanonicalForm canonical_form(const EnhancedLevelGraph& g) {
  const auto order = canonical_order(g);
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  CanonicalForm f;
  for (int v : order) f.vertices.emplace_back(g.level(v), g.tree().legs()[v]);
  for (int e = 0; e < g.tree().edge_count(); ++e) {
    int a = pos[g.tree().edges()[e].a], b = pos[g.tree().edges()[e].b];
    if (a > b) std::swap(a, b);
    f.edges.emplace_back(a, b, g.kappa(e));
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

EnhancedLevelGraph canonicalized(const EnhancedLevelGraph& g) {
  const CanonicalForm f = canonical_form(g);
  std::vector<MarkingSet> legs;
  std::vector<int> levels;
  for (const auto& [lvl, l] : f.vertices) {
    levels.push_back(lvl);
    legs.push_back(l);
  }
  std::vector<Edge> edges;
  std::vector<int> kappa;
  for (const auto& [a, b, k] : f.edges) {
    edges.push_back({a, b});
    kappa.push_back(k);
  }
  return {StableTree::make(g.tree().n(), std::move(legs), std::move(edges)), std::move(levels), std::move(kappa)};
}

// ------------------------------------------------------------- enumeration

std::vector<EnhancedLevelGraph> enumerate_two_level(const Signature& mu, const EnumerationOptions& options) {
  const int lo = std::max(options.min_vertices, 2);
  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, EnhancedLevelGraph>> found;
  for (const auto& tree : enumerate_stable_trees(mu.n(), options.max_vertices)) {
    if (tree.vertex_count() < lo) continue;
    for (auto& g : two_level_structures(tree, mu)) {
      if (g.depth() != 1) continue;
      if (!options.allow_horizontal && g.horizontal_edge_count() > 0) continue;
      auto f = canonical_form(g);
      if (seen.insert(f).second) found.emplace_back(std::move(f), canonicalized(g));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<EnhancedLevelGraph> out;
  out.reserve(found.size());
  for (auto& [f, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<EnhancedLevelGraph> enumerate_lg1(const Signature& mu, int anchor, int n, int max_vertices) {
  if (mu.n() != n) throw Error(Errc::signature_mismatch, "n differs from signature length");
  if (!mu.is_pole(anchor)) throw Error(Errc::anchor_not_pole, "marking " + std::to_string(anchor) + " is not a pole");
  std::vector<EnhancedLevelGraph> out;
  for (auto& g : enumerate_two_level(mu, {2, max_vertices, false}))
    if (g.legs_below_top().contains(anchor)) out.push_back(std::move(g));
  return out;
}

// -------------------------------------------------------------- pushforward

DivisorClass pushforward_two_vertex(const EnhancedLevelGraph& g, PushforwardMode mode) {
  if (g.vertex_count() != 2)
    throw Error(Errc::not_two_vertex, "graph has " + std::to_string(g.vertex_count()) + " vertices");
  const int n = g.tree().n();
  DivisorClass out(n, Basis::boundary);
  if (g.is_horizontal(0)) {
    out.add(Symbol::delta(canonicalize(g.tree().legs()[0], n)), 1);
    return out;
  }
  const MarkingSet lower = g.tree().legs()[g.lower_end(0)];
  const Rational c = mode == PushforwardMode::kappa_weighted ? Rational(g.kappa(0)) : Rational(1);
  out.add(Symbol::delta(canonicalize(lower, n)), c);
  return out;
}

DivisorClass xi_pushforward(const Signature& mu, int anchor, PushforwardMode mode) {
  if (!mu.is_pole(anchor)) throw Error(Errc::anchor_not_pole, "marking " + std::to_string(anchor) + " is not a pole");
  if (mu.order(anchor) != -1)
    throw Error(Errc::unsupported_signature, "the psi term only vanishes at a simple pole");
  DivisorClass out(mu.n(), Basis::boundary);
  // graphs with three or more vertices push forward to zero
  for (const auto& g : enumerate_lg1(mu, anchor, mu.n(), 2))
    out += Rational(ell_gamma(g)) * pushforward_two_vertex(g, mode);
  return out;
}

// ---------------------------------------------------------------- residues

int poles_on_top(const EnhancedLevelGraph& g, const Signature& mu) {
  return (g.legs_on_level(0) & mu.pole_set()).size();
}

bool dominates_residue_space(const EnhancedLevelGraph& g, const Signature& mu) {
  if (mu.n() != g.tree().n()) throw Error(Errc::signature_mismatch, "signature length differs from leg count");
  if (!mu.all_poles_simple()) throw Error(Errc::unsupported_signature, "dominance test needs simple poles");
  if (g.legs_below_top().intersects(mu.pole_set())) return false;

  const auto& t = g.tree();
  const std::vector<int> poles = mu.poles();
  const std::size_t r = poles.size();
  // Unknowns: marked pole residues, then two half-edge residues per
  // horizontal node on the top level.
  std::vector<int> top_horizontal;
  for (int e = 0; e < t.edge_count(); ++e)
    if (g.is_horizontal(e) && g.level(t.edges()[e].a) == 0) top_horizontal.push_back(e);
  const std::size_t unknowns = r + 2 * top_horizontal.size();
  std::vector<RatVector> rows;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.level(v) != 0) continue;
    RatVector row(unknowns);
    for (std::size_t i = 0; i < r; ++i)
      if (t.legs()[v].contains(poles[i])) row[i] = 1;
    for (std::size_t h = 0; h < top_horizontal.size(); ++h) {
      const auto& ed = t.edges()[top_horizontal[h]];
      if (ed.a == v) row[r + 2 * h] = 1;
      if (ed.b == v) row[r + 2 * h + 1] = 1;
    }
    rows.push_back(std::move(row));
  }
  for (std::size_t h = 0; h < top_horizontal.size(); ++h) {
    RatVector row(unknowns);
    row[r + 2 * h] = 1;
    row[r + 2 * h + 1] = 1;
    rows.push_back(std::move(row));
  }
  const auto kernel = kernel_basis(RatMatrix::from_rows(rows));
  // Dimension of the attainable residue vectors = rank of the kernel
  // projected onto the marked-pole coordinates.
  std::vector<RatVector> projected;
  for (const auto& k : kernel) projected.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(r));
  const std::size_t dim = projected.empty() ? 0 : rank(RatMatrix::from_rows(projected));
  return dim + 1 == r;
}

}  // namespace rescone
