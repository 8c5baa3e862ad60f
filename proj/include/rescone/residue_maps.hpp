#pragma once

#include <span>
#include <vector>

#include "rescone/pic_basis.hpp"
#include "rescone/rational.hpp"
#include "rescone/signature.hpp"

namespace rescone {

/// H_S for a nonempty proper subset S of the r poles, modulo complement.
/// Members are pole ordinals 0..r-1 (ordinal k is the (k+1)-th pole); the
/// stored representative never contains the last ordinal r-1.
class ResonanceHyperplane {
 public:
  /// Canonicalizes; throws invalid-hyperplane for empty or full S.
  static ResonanceHyperplane make(int pole_count, const std::vector<int>& ordinals);

  int pole_count() const { return r_; }
  const std::vector<int>& ordinals() const { return ordinals_; }
  int size() const { return static_cast<int>(ordinals_.size()); }
  /// Marking labels of the members for a signature with this many poles.
  std::vector<int> markings(const Signature& mu) const;

  friend bool operator==(const ResonanceHyperplane&, const ResonanceHyperplane&) = default;
  friend auto operator<=>(const ResonanceHyperplane& a, const ResonanceHyperplane& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.ordinals_.size() <=> b.ordinals_.size(); c != 0) return c;
    return a.ordinals_ <=> b.ordinals_;
  }

 private:
  int r_ = 0;
  std::vector<int> ordinals_;
};

/// All 2^(r-1) - 1 canonical hyperplanes, ordered by (size, lex). r >= 3.
std::vector<ResonanceHyperplane> resonance_hyperplanes(int pole_count);

/// Exact residues of a differential at its poles (which sum to zero).
class ResidueVector {
 public:
  /// Throws nonzero-residue-sum or dimension-mismatch.
  ResidueVector(std::vector<int> poles, std::vector<Rational> values);
  /// Poles labelled 1..r.
  explicit ResidueVector(std::vector<Rational> values);

  const std::vector<int>& poles() const { return poles_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;

 private:
  std::vector<int> poles_;
  std::vector<Rational> values_;
};

/// Sum over boundary sets T containing the anchor pole of
/// max{0, sum_{j in T} m_j - |T cap poles| + 1} delta_T. Throws anchor-not-pole.
DivisorClass dmu_class(const Signature& mu, int anchor);
/// Anchor defaults to the last pole.
DivisorClass dmu_class(const Signature& mu);

/// Coefficient of delta_T in the boundary correction of the resonance
/// transform divisor for S. T is any nonempty proper subset of {1..n}; it is
/// replaced by its complement when it contains marking n. S must be a
/// nonempty set of poles avoiding marking n (invalid-S otherwise).
Rational c_S_T(const Signature& mu, const MarkingSet& s, const MarkingSet& t);

/// dmu_class(mu, anchor) - sum_T c_S(T) delta_T.
DivisorClass dmu_s_class(const Signature& mu, const MarkingSet& s, int anchor);
DivisorClass dmu_s_class(const Signature& mu, const MarkingSet& s);

/// Residue at each pole p_j of scale * prod_i (z - p_i)^{m_i} dz, i.e.
/// scale * prod_{i != j} (p_j - p_i)^{m_i}. Needs simple poles.
ResidueVector residues_at(const Signature& mu, std::span<const Rational> points, const Rational& scale = 1);

/// Every canonical hyperplane containing the residue vector.
std::vector<ResonanceHyperplane> resonance_membership(const ResidueVector& residues);

/// Number of connected components of a generic fibre of the residue map.
/// Needs at least two zeros (unsupported-signature otherwise).
int fiber_components(const Signature& mu);

/// Monodromy of the degree-two cover around H_S, for mu = (2,2,-1^6) only.
int monodromy_sign(const Signature& mu, const ResonanceHyperplane& s);

}  // namespace rescone
