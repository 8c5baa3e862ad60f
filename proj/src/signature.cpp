#include "rescone/signature.hpp"

#include <numeric>

#include "rescone/error.hpp"

namespace rescone {

Signature Signature::validate(std::span<const int> entries) {
  if (entries.empty() || static_cast<int>(entries.size()) > kMaxMarkings)
    throw Error(Errc::invalid_marking_count, "signature length " + std::to_string(entries.size()));
  Signature s;
  s.entries_.assign(entries.begin(), entries.end());
  for (int e : s.entries_)
    if (e == 0) throw Error(Errc::zero_entry, "signature " + s.str() + " has a zero entry");
  if (std::accumulate(entries.begin(), entries.end(), 0) != -2)
    throw Error(Errc::bad_sum, "signature " + s.str() + " does not sum to -2");
  bool seen_pole = false;
  for (int e : s.entries_) {
    if (e < 0) {
      seen_pole = true;
    } else if (seen_pole) {
      throw Error(Errc::bad_ordering, "signature " + s.str() + " lists a zero after a pole");
    } else {
      ++s.zeros_;
    }
  }
  return s;
}

bool Signature::all_poles_simple() const {
  for (int i = zeros_; i < n(); ++i)
    if (entries_[static_cast<std::size_t>(i)] != -1) return false;
  return true;
}

std::vector<int> Signature::poles() const {
  std::vector<int> out;
  for (int i = zeros_ + 1; i <= n(); ++i) out.push_back(i);
  return out;
}

int Signature::weight(const MarkingSet& t) const {
  int w = 0;
  for (int i : t.elements()) w += order(i);
  return w;
}

std::string Signature::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace rescone
