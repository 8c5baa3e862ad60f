#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rescone/rational.hpp"

namespace rescone {

inline constexpr int kMaxMarkings = 20;

/// A subset of the markings {1..n}, stored as a bitmask (bit i-1 is marking i).
///
/// Ordering is by size, then lexicographic on the sorted element list. This is
/// the one canonical order used for symbols, matrix columns and serialization.
class MarkingSet {
 public:
  constexpr MarkingSet() = default;
  MarkingSet(std::initializer_list<int> markings);
  explicit MarkingSet(const std::vector<int>& markings);
  static constexpr MarkingSet from_bits(std::uint32_t bits) {
    MarkingSet s;
    s.bits_ = bits;
    return s;
  }
  static MarkingSet range(int first, int last);  // {first..last}, empty when first > last

  std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int marking) const { return marking >= 1 && marking <= 32 && ((bits_ >> (marking - 1)) & 1U); }
  int min() const { return std::countr_zero(bits_) + 1; }
  int max() const { return 32 - std::countl_zero(bits_); }
  std::vector<int> elements() const;

  MarkingSet with(int marking) const;
  MarkingSet without(int marking) const;
  MarkingSet complement(int n) const;
  bool is_subset_of(const MarkingSet& o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(const MarkingSet& o) const { return (bits_ & o.bits_) != 0; }

  friend MarkingSet operator|(MarkingSet a, MarkingSet b) { return from_bits(a.bits_ | b.bits_); }
  friend MarkingSet operator&(MarkingSet a, MarkingSet b) { return from_bits(a.bits_ & b.bits_); }
  friend MarkingSet operator-(MarkingSet a, MarkingSet b) { return from_bits(a.bits_ & ~b.bits_); }

  friend bool operator==(const MarkingSet&, const MarkingSet&) = default;
  friend std::strong_ordering operator<=>(const MarkingSet& a, const MarkingSet& b);

  /// "{1,2,5}"
  std::string str() const;

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `universe` of the given size, in canonical order.
std::vector<MarkingSet> subsets_of_size(const MarkingSet& universe, int size);

/// A boundary divisor delta_T, represented by the side of {T, T^c} that
/// contains marking 1. Only constructible through canonicalize().
class BoundarySet {
 public:
  int n() const { return n_; }
  const MarkingSet& members() const { return members_; }

  friend bool operator==(const BoundarySet&, const BoundarySet&) = default;
  friend auto operator<=>(const BoundarySet& a, const BoundarySet& b) { return a.members_ <=> b.members_; }

 private:
  friend BoundarySet canonicalize(const MarkingSet& t, int n);
  BoundarySet(int n, MarkingSet members) : n_(n), members_(members) {}
  int n_ = 0;
  MarkingSet members_;
};

/// Requires 2 <= |T| <= n-2, T within {1..n}; throws invalid-boundary-set.
BoundarySet canonicalize(const MarkingSet& t, int n);

/// All canonical boundary sets, sorted; 2^(n-1) - n - 1 of them.
std::vector<BoundarySet> enumerate_boundary(int n);

enum class SymbolKind { H, E, Delta };

/// A generator of the divisor class group: either a Kapranov symbol (H, E_S)
/// or a boundary symbol delta_T.
struct Symbol {
  SymbolKind kind = SymbolKind::H;
  MarkingSet set;

  static Symbol H() { return {}; }
  static Symbol E(MarkingSet s) { return {SymbolKind::E, s}; }
  static Symbol delta(const BoundarySet& t) { return {SymbolKind::Delta, t.members()}; }

  /// "H", "E{2,3}", "delta{1,2}"
  std::string name() const;
  static Symbol parse(std::string_view name);

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
};

using KapranovSymbol = Symbol;

/// H followed by every E_S, S in {2..n}, 1 <= |S| <= n-4, in canonical order.
std::vector<KapranovSymbol> kapranov_basis(int n);
int picard_rank(int n);

enum class Basis { boundary, kapranov };
std::string_view basis_name(Basis b);

/// Sparse exact linear combination of symbols over one basis. Zero
/// coefficients are never stored.
class DivisorClass {
 public:
  DivisorClass(int n, Basis basis);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const std::map<Symbol, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Symbol& s) const;

  /// Adds c to the coefficient of s. Throws invalid-symbol when s does not
  /// belong to this class's basis and marking count.
  DivisorClass& add(const Symbol& s, const Rational& c);

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  DivisorClass& operator*=(const Rational& c);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }

  /// Coefficients in the order of `columns`.
  std::vector<Rational> coordinates(const std::vector<Symbol>& columns) const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void check_compatible(const DivisorClass& o) const;
  int n_;
  Basis basis_;
  std::map<Symbol, Rational> terms_;
};

/// delta_T in the Kapranov basis centred at marking 1.
DivisorClass boundary_to_kapranov(const BoundarySet& t);
/// Same, for a raw subset; throws invalid-boundary-set unless it is already canonical.
DivisorClass boundary_to_kapranov(const MarkingSet& t, int n);
/// Linear extension over a boundary-basis class.
DivisorClass to_kapranov(const DivisorClass& c);

/// Drops every coefficient on a symbol outside `kept`. `kept` must contain H.
DivisorClass quotient_reduce(const DivisorClass& c, const std::set<KapranovSymbol>& kept);

}  // namespace rescone
