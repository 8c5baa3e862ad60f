#include "rescone/pic_basis.hpp"

#include <algorithm>
#include <charconv>

#include "rescone/error.hpp"

namespace rescone {
namespace {

void check_marking(int m) {
  if (m < 1 || m > kMaxMarkings)
    throw Error(Errc::invalid_marking_count, "marking " + std::to_string(m) + " out of range");
}

void check_n(int n, int min_n) {
  if (n < min_n || n > kMaxMarkings)
    throw Error(Errc::invalid_marking_count, "n = " + std::to_string(n) + " (need " +
                                                 std::to_string(min_n) + " <= n <= " +
                                                 std::to_string(kMaxMarkings) + ")");
}

}  // namespace

MarkingSet::MarkingSet(std::initializer_list<int> markings) {
  for (int m : markings) *this = with(m);
}

MarkingSet::MarkingSet(const std::vector<int>& markings) {
  for (int m : markings) *this = with(m);
}

MarkingSet MarkingSet::range(int first, int last) {
  MarkingSet s;
  for (int i = first; i <= last; ++i) s = s.with(i);
  return s;
}

std::vector<int> MarkingSet::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

MarkingSet MarkingSet::with(int marking) const {
  check_marking(marking);
  return from_bits(bits_ | (1U << (marking - 1)));
}

MarkingSet MarkingSet::without(int marking) const {
  check_marking(marking);
  return from_bits(bits_ & ~(1U << (marking - 1)));
}

MarkingSet MarkingSet::complement(int n) const {
  const std::uint32_t all = n >= 32 ? ~0U : ((1U << n) - 1U);
  return from_bits(all & ~bits_);
}

std::strong_ordering operator<=>(const MarkingSet& a, const MarkingSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const std::uint32_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The set owning the smallest differing element is lexicographically first.
  return (a.bits_ & (diff & (~diff + 1))) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string MarkingSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::vector<MarkingSet> subsets_of_size(const MarkingSet& universe, int size) {
  std::vector<MarkingSet> out;
  const std::vector<int> elems = universe.elements();
  const int u = static_cast<int>(elems.size());
  if (size < 0 || size > u) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    MarkingSet s;
    for (int i : idx) s = s.with(elems[i]);
    out.push_back(s);
    int k = size - 1;
    while (k >= 0 && idx[k] == u - size + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

BoundarySet canonicalize(const MarkingSet& t, int n) {
  check_n(n, 4);
  if (!t.is_subset_of(MarkingSet::range(1, n)) || t.size() < 2 || t.size() > n - 2)
    throw Error(Errc::invalid_boundary_set, t.str() + " is not a boundary set for n = " + std::to_string(n));
  return BoundarySet(n, t.contains(1) ? t : t.complement(n));
}

std::vector<BoundarySet> enumerate_boundary(int n) {
  check_n(n, 4);
  std::vector<BoundarySet> out;
  const MarkingSet rest = MarkingSet::range(2, n);
  for (int k = 1; k <= n - 3; ++k)
    for (const auto& s : subsets_of_size(rest, k)) out.push_back(canonicalize(s.with(1), n));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Symbol::name() const {
  switch (kind) {
    case SymbolKind::H: return "H";
    case SymbolKind::E: return "E" + set.str();
    case SymbolKind::Delta: return "delta" + set.str();
  }
  return {};
}

Symbol Symbol::parse(std::string_view name) {
  if (name == "H") return H();
  Symbol s;
  std::string_view body;
  if (name.starts_with("E{")) {
    s.kind = SymbolKind::E;
    body = name.substr(1);
  } else if (name.starts_with("delta{")) {
    s.kind = SymbolKind::Delta;
    body = name.substr(5);
  } else {
    throw Error(Errc::invalid_symbol, "unknown symbol '" + std::string(name) + "'");
  }
  if (body.size() < 3 || body.back() != '}')
    throw Error(Errc::invalid_symbol, "malformed symbol '" + std::string(name) + "'");
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view tok = body.substr(0, comma);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size() || v < 1 || v > kMaxMarkings)
      throw Error(Errc::invalid_symbol, "malformed symbol '" + std::string(name) + "'");
    s.set = s.set.with(v);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  return s;
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  return a.set <=> b.set;
}

std::vector<KapranovSymbol> kapranov_basis(int n) {
  check_n(n, 5);
  std::vector<KapranovSymbol> out{Symbol::H()};
  const MarkingSet rest = MarkingSet::range(2, n);
  for (int k = 1; k <= n - 4; ++k)
    for (const auto& s : subsets_of_size(rest, k)) out.push_back(Symbol::E(s));
  return out;
}

int picard_rank(int n) { return static_cast<int>(kapranov_basis(n).size()); }

std::string_view basis_name(Basis b) { return b == Basis::boundary ? "boundary" : "kapranov"; }

DivisorClass::DivisorClass(int n, Basis basis) : n_(n), basis_(basis) {
  check_n(n, basis == Basis::kapranov ? 5 : 4);
}

Rational DivisorClass::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::add(const Symbol& s, const Rational& c) {
  const MarkingSet all = MarkingSet::range(1, n_);
  bool ok = false;
  if (basis_ == Basis::kapranov) {
    ok = s.kind == SymbolKind::H ||
         (s.kind == SymbolKind::E && !s.set.contains(1) && s.set.is_subset_of(all) && s.set.size() >= 1 &&
          s.set.size() <= n_ - 4);
  } else {
    ok = s.kind == SymbolKind::Delta && s.set.contains(1) && s.set.is_subset_of(all) && s.set.size() >= 2 &&
         s.set.size() <= n_ - 2;
  }
  if (!ok)
    throw Error(Errc::invalid_symbol, s.name() + " is not a " + std::string(basis_name(basis_)) +
                                          " symbol for n = " + std::to_string(n_));
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

void DivisorClass::check_compatible(const DivisorClass& o) const {
  if (o.n_ != n_ || o.basis_ != basis_) throw Error(Errc::wrong_basis, "mixing classes of different bases");
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  check_compatible(o);
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::vector<Rational> DivisorClass::coordinates(const std::vector<Symbol>& columns) const {
  std::vector<Rational> out;
  out.reserve(columns.size());
  for (const auto& s : columns) out.push_back(coefficient(s));
  return out;
}

DivisorClass boundary_to_kapranov(const BoundarySet& t) {
  const int n = t.n();
  DivisorClass out(n, Basis::kapranov);
  const MarkingSet& members = t.members();
  if (members.size() <= n - 3) {
    // delta_{{1} u S} = E_S
    out.add(Symbol::E(members.without(1)), 1);
    return out;
  }
  // |T| = n-2: T^c = {i,j} with 1 not in it; delta_{ij} = H - sum_{S avoiding i,j} E_S
  const MarkingSet pair = members.complement(n);
  out.add(Symbol::H(), 1);
  const MarkingSet allowed = MarkingSet::range(2, n) - pair;
  for (int k = 1; k <= n - 4; ++k)
    for (const auto& s : subsets_of_size(allowed, k)) out.add(Symbol::E(s), -1);
  return out;
}

DivisorClass boundary_to_kapranov(const MarkingSet& t, int n) {
  const BoundarySet b = canonicalize(t, n);
  if (b.members() != t)
    throw Error(Errc::invalid_boundary_set, t.str() + " is not canonical (expected " + b.members().str() + ")");
  if (n < 5) throw Error(Errc::invalid_marking_count, "Kapranov basis needs n >= 5");
  return boundary_to_kapranov(b);
}

DivisorClass to_kapranov(const DivisorClass& c) {
  if (c.basis() != Basis::boundary) throw Error(Errc::wrong_basis, "expected a boundary-basis class");
  DivisorClass out(c.n(), Basis::kapranov);
  for (const auto& [s, coeff] : c.terms()) out += coeff * boundary_to_kapranov(canonicalize(s.set, c.n()));
  return out;
}

DivisorClass quotient_reduce(const DivisorClass& c, const std::set<KapranovSymbol>& kept) {
  if (c.basis() != Basis::kapranov) throw Error(Errc::wrong_basis, "quotient_reduce needs a Kapranov class");
  if (!kept.contains(Symbol::H())) throw Error(Errc::invalid_kept_set, "kept generators must contain H");
  DivisorClass out(c.n(), Basis::kapranov);
  for (const auto& [s, coeff] : c.terms())
    if (kept.contains(s)) out.add(s, coeff);
  return out;
}

}  // namespace rescone
