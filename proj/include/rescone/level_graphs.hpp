#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rescone/pic_basis.hpp"
#include "rescone/signature.hpp"

namespace rescone {

struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Genus-zero stable dual graph: a tree whose vertices carry leg sets
/// partitioning {1..n}, each vertex of valence (legs + edges) at least 3.
class StableTree {
 public:
  /// Validates everything above; throws invalid-tree.
  static StableTree make(int n, std::vector<MarkingSet> legs, std::vector<Edge> edges);
  /// Two vertices joined by one edge: `side` on vertex 0, its complement on vertex 1.
  static StableTree two_vertex(int n, const MarkingSet& side);

  int n() const { return n_; }
  int vertex_count() const { return static_cast<int>(legs_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<MarkingSet>& legs() const { return legs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int valence(int v) const;
  /// Edge indices incident to v.
  std::vector<int> incident(int v) const;
  /// Legs in the component containing `from` after deleting edge e.
  MarkingSet branch(int e, int from) const;

 private:
  StableTree() = default;
  int n_ = 0;
  std::vector<MarkingSet> legs_;
  std::vector<Edge> edges_;
};

/// All stable trees with legs {1..n} and at most max_vertices vertices, each
/// isomorphism class (with labelled legs) exactly once. Requires n >= 3.
std::vector<StableTree> enumerate_stable_trees(int n, int max_vertices);

/// A stable tree with a level function onto {0, -1, ..., -L} and an
/// enhancement kappa on edges. Construction checks shape only; use
/// violations() to check the enhanced level structure conditions for a
/// signature.
class EnhancedLevelGraph {
 public:
  EnhancedLevelGraph(StableTree tree, std::vector<int> levels, std::vector<int> kappa);

  const StableTree& tree() const { return tree_; }
  const std::vector<int>& levels() const { return levels_; }
  const std::vector<int>& kappa() const { return kappa_; }
  int level(int v) const { return levels_.at(static_cast<std::size_t>(v)); }
  int kappa(int e) const { return kappa_.at(static_cast<std::size_t>(e)); }
  int vertex_count() const { return tree_.vertex_count(); }
  int depth() const;  // L
  bool is_horizontal(int e) const;
  int vertical_edge_count() const;
  int horizontal_edge_count() const;
  /// Endpoint of vertical edge e on the lower level.
  int lower_end(int e) const;
  MarkingSet legs_on_level(int level) const;
  MarkingSet legs_below_top() const;

  /// Left-hand side of the vertex equation at v (must equal -2).
  int vertex_degree(int v, const Signature& mu) const;
  /// Human-readable violated conditions; empty iff this is a valid enhanced
  /// level structure for mu.
  std::vector<std::string> violations(const Signature& mu) const;
  bool is_valid(const Signature& mu) const { return violations(mu).empty(); }

 private:
  StableTree tree_;
  std::vector<int> levels_;
  std::vector<int> kappa_;
};

/// Solves the vertex equations for kappa given a level assignment. In genus
/// zero each vertical kappa is forced; returns nullopt when some forced value
/// is non-positive or an equation is left unsatisfied.
std::optional<std::vector<int>> solve_enhancement(const StableTree& tree, const std::vector<int>& levels,
                                                  const Signature& mu);

/// All enhanced structures on `tree` with L = 0 (all horizontal) or L = 1.
/// Throws signature-mismatch when mu has the wrong length.
std::vector<EnhancedLevelGraph> two_level_structures(const StableTree& tree, const Signature& mu);

/// lcm of kappa over vertical edges; throws undefined-ell when there are none.
std::int64_t ell_gamma(const EnhancedLevelGraph& g);

/// Isomorphism invariant: vertices ordered top level first, then by leg set,
/// ties broken by the leg sets of the branches at the vertex (which separates
/// vertices in a tree with labelled legs). Edges reindexed and sorted.
struct CanonicalForm {
  std::vector<std::pair<int, MarkingSet>> vertices;
  std::vector<std::tuple<int, int, int>> edges;  // (a, b, kappa), a < b
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const EnhancedLevelGraph& g);
/// The same graph with vertices and edges renumbered into canonical order.
EnhancedLevelGraph canonicalized(const EnhancedLevelGraph& g);

struct EnumerationOptions {
  int min_vertices = 2;
  int max_vertices = 6;
  bool allow_horizontal = false;
};

/// Every isomorphism class of enhanced graphs with exactly two levels,
/// deduplicated by canonical form and returned in canonical order.
std::vector<EnhancedLevelGraph> enumerate_two_level(const Signature& mu, const EnumerationOptions& options);

/// Two-level graphs without horizontal edges, up to max_vertices vertices,
/// with leg `anchor` below the top level. Throws anchor-not-pole.
std::vector<EnhancedLevelGraph> enumerate_lg1(const Signature& mu, int anchor, int n, int max_vertices);

enum class PushforwardMode { kappa_weighted, unit };

/// Image of a two-vertex boundary divisor in the boundary basis: kappa * delta_T
/// or delta_T for a vertical edge (T the lower leg set), delta_T for a horizontal one.
DivisorClass pushforward_two_vertex(const EnhancedLevelGraph& g, PushforwardMode mode);

/// Sum over two-vertex graphs in lg1(mu, anchor) of ell_Gamma times the
/// pushforward. Requires a simple pole at the anchor.
DivisorClass xi_pushforward(const Signature& mu, int anchor, PushforwardMode mode);

/// Whether the boundary stratum of g maps onto the projectivised residue
/// space: all marked poles on the top level, and the residue theorems on
/// top-level components plus horizontal residue matching impose nothing
/// beyond the global sum-zero relation. Requires simple poles.
bool dominates_residue_space(const EnhancedLevelGraph& g, const Signature& mu);

/// Number of marked poles on top-level vertices.
int poles_on_top(const EnhancedLevelGraph& g, const Signature& mu);

}  // namespace rescone
