#pragma once

#include <span>
#include <string>
#include <vector>

#include "rescone/pic_basis.hpp"

namespace rescone {

/// Orders of zeros and poles (m_1..m_n) of a differential on a rational
/// curve: sums to -2, no zero entries, positive entries first.
class Signature {
 public:
  /// Throws bad-sum, zero-entry or bad-ordering.
  static Signature validate(std::span<const int> entries);
  static Signature validate(std::initializer_list<int> entries) {
    return validate(std::span<const int>(entries.begin(), entries.size()));
  }

  int n() const { return static_cast<int>(entries_.size()); }
  int order(int marking) const { return entries_.at(static_cast<std::size_t>(marking - 1)); }
  const std::vector<int>& entries() const { return entries_; }

  /// Number of zeros; zeros are markings 1..m.
  int zero_count() const { return zeros_; }
  int pole_count() const { return n() - zeros_; }
  bool is_pole(int marking) const { return marking > zeros_ && marking <= n(); }
  bool all_poles_simple() const;
  MarkingSet zero_set() const { return MarkingSet::range(1, zeros_); }
  MarkingSet pole_set() const { return MarkingSet::range(zeros_ + 1, n()); }
  std::vector<int> poles() const;

  /// Sum of orders over the markings in t.
  int weight(const MarkingSet& t) const;

  /// "2,2,-1,-1"
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> entries_;
  int zeros_ = 0;
};

}  // namespace rescone
