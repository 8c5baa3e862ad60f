#include "rescone/residue_maps.hpp"

#include <algorithm>
#include <numeric>

#include "rescone/error.hpp"

namespace rescone {

ResonanceHyperplane ResonanceHyperplane::make(int pole_count, const std::vector<int>& ordinals) {
  if (pole_count < 2 || pole_count > kMaxMarkings)
    throw Error(Errc::invalid_hyperplane, "pole count " + std::to_string(pole_count));
  std::vector<bool> in(static_cast<std::size_t>(pole_count), false);
  for (int o : ordinals) {
    if (o < 0 || o >= pole_count) throw Error(Errc::invalid_hyperplane, "pole ordinal out of range");
    in[o] = true;
  }
  const auto count = std::count(in.begin(), in.end(), true);
  if (count == 0 || count == pole_count) throw Error(Errc::invalid_hyperplane, "S must be nonempty and proper");
  const bool flip = in[pole_count - 1];
  ResonanceHyperplane h;
  h.r_ = pole_count;
  for (int o = 0; o < pole_count; ++o)
    if (in[o] != flip) h.ordinals_.push_back(o);
  return h;
}

std::vector<int> ResonanceHyperplane::markings(const Signature& mu) const {
  if (mu.pole_count() != r_) throw Error(Errc::signature_mismatch, "hyperplane and signature pole counts differ");
  std::vector<int> out;
  for (int o : ordinals_) out.push_back(mu.zero_count() + 1 + o);
  return out;
}

std::vector<ResonanceHyperplane> resonance_hyperplanes(int pole_count) {
  if (pole_count < 3) throw Error(Errc::too_few_poles, "need at least 3 poles, got " + std::to_string(pole_count));
  if (pole_count > kMaxMarkings) throw Error(Errc::invalid_marking_count, "too many poles");
  std::vector<ResonanceHyperplane> out;
  const MarkingSet universe = MarkingSet::range(1, pole_count - 1);
  for (int k = 1; k < pole_count; ++k) {
    for (const auto& s : subsets_of_size(universe, k)) {
      std::vector<int> ord;
      for (int e : s.elements()) ord.push_back(e - 1);
      out.push_back(ResonanceHyperplane::make(pole_count, ord));
    }
  }
  return out;
}

ResidueVector::ResidueVector(std::vector<int> poles, std::vector<Rational> values)
    : poles_(std::move(poles)), values_(std::move(values)) {
  if (poles_.size() != values_.size()) throw Error(Errc::dimension_mismatch, "pole labels and values differ in length");
  Rational sum;
  for (const auto& v : values_) sum += v;
  if (!sum.is_zero()) throw Error(Errc::nonzero_residue_sum, "residues sum to " + sum.str());
}

ResidueVector::ResidueVector(std::vector<Rational> values)
    : ResidueVector(
          [&] {
            std::vector<int> p(values.size());
            std::iota(p.begin(), p.end(), 1);
            return p;
          }(),
          values) {}

namespace {

void require_pole(const Signature& mu, int anchor) {
  if (!mu.is_pole(anchor)) throw Error(Errc::anchor_not_pole, "marking " + std::to_string(anchor) + " is not a pole");
}

void require_simple(const Signature& mu, const char* what) {
  if (!mu.all_poles_simple()) throw Error(Errc::unsupported_signature, std::string(what) + " needs simple poles");
}

// All T within {1..n} containing `must`, 2 <= |T| <= n-2.
template <typename F>
void for_each_boundary_subset_containing(int n, int must, F&& f) {
  const MarkingSet others = MarkingSet::range(1, n).without(must);
  for (int k = 1; k <= n - 3; ++k)
    for (const auto& s : subsets_of_size(others, k)) f(s.with(must));
}

}  // namespace

DivisorClass dmu_class(const Signature& mu, int anchor) {
  require_pole(mu, anchor);
  const int n = mu.n();
  DivisorClass out(n, Basis::boundary);
  const MarkingSet poles = mu.pole_set();
  for_each_boundary_subset_containing(n, anchor, [&](const MarkingSet& t) {
    const int value = mu.weight(t) - (t & poles).size() + 1;
    if (value > 0) out.add(Symbol::delta(canonicalize(t, n)), value);
  });
  return out;
}

DivisorClass dmu_class(const Signature& mu) { return dmu_class(mu, mu.n()); }

namespace {

void check_s(const Signature& mu, const MarkingSet& s) {
  if (s.empty() || !s.is_subset_of(mu.pole_set()) || s.contains(mu.n()))
    throw Error(Errc::invalid_s, "S = " + s.str() + " must be a nonempty set of poles avoiding marking " +
                                     std::to_string(mu.n()));
}

}  // namespace

Rational c_S_T(const Signature& mu, const MarkingSet& s, const MarkingSet& t_in) {
  require_simple(mu, "c_S(T)");
  check_s(mu, s);
  const int n = mu.n();
  const MarkingSet all = MarkingSet::range(1, n);
  if (t_in.empty() || !t_in.is_subset_of(all) || t_in == all)
    throw Error(Errc::invalid_boundary_set, "T = " + t_in.str() + " must be a nonempty proper subset");
  const MarkingSet t = t_in.contains(n) ? t_in.complement(n) : t_in;
  const MarkingSet t_minus = t & mu.pole_set();
  const int a_t = mu.weight(t & mu.zero_set());
  const int p = t_minus.size();
  if (t_minus == s) return Rational(a_t - p + 1).abs();
  if (s.is_subset_of(t_minus)) return std::max(0, a_t - p + 1);
  if (t_minus.is_subset_of(s)) return std::max(0, p - 1 - a_t);
  return 0;
}

DivisorClass dmu_s_class(const Signature& mu, const MarkingSet& s, int anchor) {
  require_simple(mu, "resonance transform class");
  check_s(mu, s);
  DivisorClass out = dmu_class(mu, anchor);
  const int n = mu.n();
  for (const auto& b : enumerate_boundary(n)) {
    const Rational c = c_S_T(mu, s, b.members());
    if (!c.is_zero()) out.add(Symbol::delta(b), -c);
  }
  return out;
}

DivisorClass dmu_s_class(const Signature& mu, const MarkingSet& s) { return dmu_s_class(mu, s, mu.n()); }

ResidueVector residues_at(const Signature& mu, std::span<const Rational> points, const Rational& scale) {
  require_simple(mu, "residue evaluation");
  if (static_cast<int>(points.size()) != mu.n())
    throw Error(Errc::signature_mismatch, "expected " + std::to_string(mu.n()) + " points, got " +
                                              std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(Errc::degenerate_configuration, "points " + std::to_string(i + 1) + " and " +
                                                        std::to_string(j + 1) + " coincide");
  std::vector<int> poles = mu.poles();
  std::vector<Rational> values;
  for (int p : poles) {
    Rational v = scale;
    const Rational& z = points[static_cast<std::size_t>(p - 1)];
    for (int i = 1; i <= mu.n(); ++i) {
      if (i == p) continue;
      v *= (z - points[static_cast<std::size_t>(i - 1)]).pow(mu.order(i));
    }
    values.push_back(std::move(v));
  }
  return {std::move(poles), std::move(values)};
}

std::vector<ResonanceHyperplane> resonance_membership(const ResidueVector& residues) {
  const int r = static_cast<int>(residues.size());
  std::vector<ResonanceHyperplane> out;
  if (r < 2) return out;
  // canonical representatives avoid the last ordinal
  for (std::uint32_t mask = 1; mask < (1U << (r - 1)); ++mask) {
    Rational sum;
    std::vector<int> ord;
    for (int o = 0; o < r - 1; ++o) {
      if ((mask >> o) & 1U) {
        sum += residues.values()[static_cast<std::size_t>(o)];
        ord.push_back(o);
      }
    }
    if (sum.is_zero()) out.push_back(ResonanceHyperplane::make(r, ord));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int fiber_components(const Signature& mu) {
  if (mu.zero_count() < 2) throw Error(Errc::unsupported_signature, "fibres are positive dimensional only with >= 2 zeros");
  int simple = 0;
  int g = 0;
  for (int e : mu.entries()) {
    if (e == -1) ++simple;
    else g = std::gcd(g, std::abs(e));
  }
  // k a_1..k a_m, -k b_1..-k b_{p-2}, (-1)^2 with gcd(a, b) = 1
  if (simple == 2 && g >= 2) return g;
  // 2 a_1..2 a_m, -2 b_1.., (-1)^{2t}, t >= 2
  if (simple >= 4 && simple % 2 == 0 && g % 2 == 0) return 2;
  return 1;
}

int monodromy_sign(const Signature& mu, const ResonanceHyperplane& s) {
  if (mu != Signature::validate({2, 2, -1, -1, -1, -1, -1, -1}))
    throw Error(Errc::unsupported_signature, "the sign rule is known only for (2,2,-1^6)");
  if (s.pole_count() != 6) throw Error(Errc::invalid_hyperplane, "hyperplane must be over 6 poles");
  return (s.size() == 1 || s.size() == 5) ? -1 : +1;
}

}  // namespace rescone
