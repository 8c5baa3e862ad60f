#include "rescone/render.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "rescone/error.hpp"

namespace rescone {

using Json = nlohmann::ordered_json;

namespace {

void pretty(const Json& j, int depth, std::string& out);

// Inline form for scalars, flat arrays and short objects of those.
std::optional<std::string> inline_form(const Json& j) {
  if (j.is_primitive()) return j.dump();
  std::string out;
  if (j.is_array()) {
    out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured()) return std::nullopt;
      out += (i ? ", " : "") + j[i].dump();
    }
    return out + "]";
  }
  out = "{";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) return std::nullopt;
    auto inner = inline_form(v);
    if (!inner) return std::nullopt;
    out += (first ? "" : ", ") + Json(k).dump() + ": " + *inner;
    first = false;
  }
  out += "}";
  if (out.size() > 96) return std::nullopt;
  return out;
}

// Two-space indentation; scalar arrays and short array elements stay on one line.
void pretty(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      pretty(v, depth + 1, out);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      if (auto line = inline_form(j[i]); line && j[i].is_object())
        out += *line;
      else
        pretty(j[i], depth + 1, out);
    }
    out += "\n" + close + "]";
  } else {
    out += j.dump();
  }
}

std::string dump(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

Json rational_number(const Rational& r) {
  if (r.fits_int64()) return r.to_int64();
  return r.str();
}

Json rational_row(const std::vector<Rational>& row) {
  Json a = Json::array();
  for (const auto& x : row) a.push_back(rational_number(x));
  return a;
}

Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(rational_row({m.row(r).begin(), m.row(r).end()}));
  return rows;
}

Json symbol_names(const std::vector<KapranovSymbol>& syms) {
  Json a = Json::array();
  for (const auto& s : syms) a.push_back(s.name());
  return a;
}

Json divisor_json(const DivisorClass& c) {
  Json j;
  j["n"] = c.n();
  j["basis"] = basis_name(c.basis());
  Json terms = Json::array();
  for (const auto& [s, coeff] : c.terms()) terms.push_back(Json{{"sym", s.name()}, {"c", coeff.str()}});
  j["terms"] = std::move(terms);
  return j;
}

Json graph_json(const EnhancedLevelGraph& g) {
  Json vertices = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v)
    vertices.push_back(Json{{"level", g.level(v)}, {"legs", g.tree().legs()[v].elements()}});
  Json edges = Json::array();
  for (int e = 0; e < g.tree().edge_count(); ++e)
    edges.push_back(Json{{"a", g.tree().edges()[e].a}, {"b", g.tree().edges()[e].b}, {"kappa", g.kappa(e)}});
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json residues_json(const ResidueVector& r) {
  Json values = Json::array();
  for (const auto& v : r.values()) values.push_back(v.str());
  return Json{{"poles", r.poles()}, {"values", std::move(values)}};
}

Json certificate_json(const RankCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["mu"] = c.mu.entries();
  j["rho"] = c.rho;
  j["kept"] = symbol_names(c.kept);
  j["killed_count"] = c.killed_count;
  j["matrix"] = matrix_json(c.matrix);
  j["matrix_rank"] = c.matrix_rank;
  j["contracted_span_rank"] = c.contracted_span_rank;
  j["corank"] = c.corank;
  j["verdict"] = verdict_name(c.verdict);
  j["dmu_row_source"] = dmu_source_name(c.dmu_source);
  j["boundary_rows_rank"] = c.boundary_rows_rank;
  return j;
}

Json report_json(const ReconciliationReport& r) {
  Json j;
  j["n"] = r.n;
  j["mu"] = r.mu.entries();
  j["anchor"] = r.anchor;
  j["columns"] = symbol_names(r.columns);
  j["reference_source"] = r.reference_source;
  j["reference"] = rational_row(r.reference);
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back(Json{{"name", c.name}, {"row", rational_row(c.row)}, {"difference", rational_row(c.difference)}});
  j["candidates"] = std::move(cands);
  Json rows = Json::array();
  for (const auto& a : r.anchor_rows) rows.push_back(Json{{"anchor", a.anchor}, {"row", rational_row(a.row)}});
  Json diffs = Json::array();
  for (const auto& d : r.anchor_differences)
    diffs.push_back(Json{{"anchors", {d.anchor_a, d.anchor_b}}, {"difference", rational_row(d.difference)}});
  j["anchor_independence"] = Json{{"rows", std::move(rows)}, {"differences", std::move(diffs)}};
  return j;
}

[[noreturn]] void unsupported(std::string_view what, Format f) {
  static constexpr std::string_view names[] = {"json", "table", "csv"};
  throw Error(Errc::unsupported_format,
              std::string(what) + " cannot be rendered as " + std::string(names[static_cast<int>(f)]));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string grid(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_table(const RatMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    cells.push_back(std::move(row));
  }
  // right-align every column, including the first
  std::vector<std::size_t> width(m.cols(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    os << '\n';
  }
  return os.str();
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].str();
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  throw Error(Errc::unsupported_format, "unknown format '" + std::string(name) + "'");
}

std::string divisor_class_to_json(const DivisorClass& c) { return dump(divisor_json(c)); }

DivisorClass divisor_class_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    const std::string basis = j.at("basis").get<std::string>();
    if (basis != "boundary" && basis != "kapranov") throw Error(Errc::parse_error, "unknown basis '" + basis + "'");
    DivisorClass c(j.at("n").get<int>(), basis == "boundary" ? Basis::boundary : Basis::kapranov);
    for (const auto& t : j.at("terms")) {
      const auto& cj = t.at("c");
      const Rational coeff = cj.is_string() ? Rational::parse(cj.get<std::string>()) : Rational(cj.get<long>());
      c.add(Symbol::parse(t.at("sym").get<std::string>()), coeff);
    }
    return c;
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("divisor class JSON: ") + e.what());
  }
}

std::string graph_to_json(const EnhancedLevelGraph& g) { return dump(graph_json(g)); }

EnhancedLevelGraph graph_from_json(std::string_view text, int n) {
  try {
    const Json j = Json::parse(text);
    std::vector<MarkingSet> legs;
    std::vector<int> levels;
    for (const auto& v : j.at("vertices")) {
      levels.push_back(v.at("level").get<int>());
      legs.emplace_back(v.at("legs").get<std::vector<int>>());
    }
    std::vector<Edge> edges;
    std::vector<int> kappa;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("a").get<int>(), e.at("b").get<int>()});
      kappa.push_back(e.at("kappa").get<int>());
    }
    return {StableTree::make(n, std::move(legs), std::move(edges)), std::move(levels), std::move(kappa)};
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, std::string("graph JSON: ") + e.what());
  }
}

std::string residues_to_json(const ResidueVector& r) { return dump(residues_json(r)); }

std::string render_basis(int n, const std::vector<KapranovSymbol>& symbols, Format f) {
  if (f == Format::json) {
    Json j;
    j["n"] = n;
    j["rho"] = symbols.size();
    j["symbols"] = symbol_names(symbols);
    return dump(j);
  }
  if (f == Format::csv) unsupported("basis", f);
  std::vector<std::vector<std::string>> cells{{"index", "symbol"}};
  for (std::size_t i = 0; i < symbols.size(); ++i) cells.push_back({std::to_string(i), symbols[i].name()});
  return "rho = " + std::to_string(symbols.size()) + "\n" + grid(cells);
}

std::string render_boundary(int n, const std::vector<BoundarySet>& sets, Format f) {
  if (f == Format::json) {
    Json a = Json::array();
    for (const auto& b : sets) a.push_back(b.members().elements());
    Json j;
    j["n"] = n;
    j["count"] = sets.size();
    j["boundary"] = std::move(a);
    return dump(j);
  }
  if (f == Format::csv) unsupported("boundary list", f);
  std::vector<std::vector<std::string>> cells{{"index", "T"}};
  for (std::size_t i = 0; i < sets.size(); ++i) cells.push_back({std::to_string(i), sets[i].members().str()});
  return "count = " + std::to_string(sets.size()) + "\n" + grid(cells);
}

std::string render(const DivisorClass& c, Format f) {
  switch (f) {
    case Format::json: return divisor_class_to_json(c);
    case Format::table: {
      std::vector<std::vector<std::string>> cells{{"symbol", "coefficient"}};
      for (const auto& [s, coeff] : c.terms()) cells.push_back({s.name(), coeff.str()});
      return grid(cells);
    }
    case Format::csv: {
      std::string out;
      for (const auto& [s, coeff] : c.terms()) out += csv_field(s.name()) + "," + coeff.str() + "\n";
      return out;
    }
  }
  return {};
}

std::string render(const RatMatrix& m, Format f) {
  switch (f) {
    case Format::json: {
      Json j;
      j["rows"] = m.rows();
      j["cols"] = m.cols();
      j["rank"] = rank(m);
      j["matrix"] = matrix_json(m);
      return dump(j);
    }
    case Format::table: return "rank = " + std::to_string(rank(m)) + "\n" + matrix_table(m);
    case Format::csv: return to_csv(m);
  }
  return {};
}

std::string render_graphs(const Signature& mu, const std::vector<EnhancedLevelGraph>& graphs, Format f) {
  const bool simple = mu.all_poles_simple();
  if (f == Format::csv) unsupported("graph list", f);
  if (f == Format::json) {
    Json list = Json::array();
    for (const auto& g : graphs) {
      Json j = graph_json(g);
      if (g.vertical_edge_count() > 0) j["ell"] = ell_gamma(g);
      j["poles_on_top"] = poles_on_top(g, mu);
      if (simple) j["dominates"] = dominates_residue_space(g, mu);
      list.push_back(std::move(j));
    }
    Json j;
    j["mu"] = mu.entries();
    j["count"] = graphs.size();
    j["graphs"] = std::move(list);
    return dump(j);
  }
  std::vector<std::vector<std::string>> cells{{"#", "top", "bottom", "kappa", "ell", "dominates"}};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    std::string top, bottom;
    for (int v = 0; v < g.vertex_count(); ++v) (g.level(v) == 0 ? top : bottom) += g.tree().legs()[v].str();
    cells.push_back({std::to_string(i), top, bottom, join_ints(g.kappa(), ' '),
                     g.vertical_edge_count() ? std::to_string(ell_gamma(g)) : "-",
                     simple ? (dominates_residue_space(g, mu) ? "yes" : "no") : "-"});
  }
  return "count = " + std::to_string(graphs.size()) + "\n" + grid(cells);
}

std::string render_residues(const Signature& mu, const ResidueVector& r,
                            const std::vector<ResonanceHyperplane>* membership, Format f) {
  switch (f) {
    case Format::json: {
      Json j = residues_json(r);
      if (membership) {
        Json hs = Json::array();
        for (const auto& h : *membership) hs.push_back(h.markings(mu));
        j["hyperplanes"] = std::move(hs);
      }
      return dump(j);
    }
    case Format::table: {
      std::vector<std::vector<std::string>> cells{{"pole", "residue"}};
      for (std::size_t i = 0; i < r.size(); ++i) cells.push_back({std::to_string(r.poles()[i]), r.values()[i].str()});
      std::string out = grid(cells);
      if (membership) {
        out += "hyperplanes:";
        for (const auto& h : *membership) out += " {" + join_ints(h.markings(mu)) + "}";
        out += "\n";
      }
      return out;
    }
    case Format::csv: {
      if (membership) unsupported("residues with hyperplanes", f);
      std::string out;
      for (std::size_t i = 0; i < r.size(); ++i) out += std::to_string(r.poles()[i]) + "," + r.values()[i].str() + "\n";
      return out;
    }
  }
  return {};
}

std::string render_components(const Signature& mu, int components, bool with_monodromy, Format f) {
  if (f == Format::csv) unsupported("component count", f);
  std::vector<std::pair<std::vector<int>, int>> signs;
  if (with_monodromy)
    for (const auto& h : resonance_hyperplanes(mu.pole_count())) signs.emplace_back(h.markings(mu), monodromy_sign(mu, h));
  if (f == Format::json) {
    Json j;
    j["mu"] = mu.entries();
    j["components"] = components;
    if (with_monodromy) {
      Json a = Json::array();
      for (const auto& [s, sign] : signs) a.push_back(Json{{"S", s}, {"sign", sign}});
      j["monodromy"] = std::move(a);
    }
    return dump(j);
  }
  std::string out = "mu = (" + mu.str() + ")\ncomponents = " + std::to_string(components) + "\n";
  if (with_monodromy) {
    std::vector<std::vector<std::string>> cells{{"S", "sign"}};
    for (const auto& [s, sign] : signs) cells.push_back({"{" + join_ints(s) + "}", sign > 0 ? "+1" : "-1"});
    out += grid(cells);
  }
  return out;
}

std::string render(const RankCertificate& c, Format f) {
  switch (f) {
    case Format::json: return dump(certificate_json(c));
    case Format::csv: return to_csv(c.matrix);
    case Format::table: {
      std::ostringstream os;
      os << "mu                    (" << c.mu.str() << ")\n"
         << "n                     " << c.n << "\n"
         << "rho                   " << c.rho << "\n"
         << "kept                  " << c.kept.size() << "\n"
         << "killed                " << c.killed_count << "\n"
         << "matrix                " << c.matrix.rows() << "x" << c.matrix.cols() << "\n"
         << "matrix_rank           " << c.matrix_rank << "\n"
         << "boundary_rows_rank    " << c.boundary_rows_rank << "\n"
         << "contracted_span_rank  " << c.contracted_span_rank << "\n"
         << "corank                " << c.corank << "\n"
         << "verdict               " << verdict_name(c.verdict) << "\n"
         << "dmu_row_source        " << dmu_source_name(c.dmu_source) << "\n"
         << "columns              ";
      for (const auto& s : c.kept) os << ' ' << s.name();
      os << "\n" << matrix_table(c.matrix);
      return os.str();
    }
  }
  return {};
}

std::string render(const ReconciliationReport& r, Format f) {
  if (f == Format::csv) unsupported("reconciliation report", f);
  if (f == Format::json) return dump(report_json(r));
  std::ostringstream os;
  os << "anchor " << r.anchor << ", reference " << r.reference_source << "\n"
     << "reference           " << rational_list(r.reference) << "\n";
  for (const auto& c : r.candidates) {
    os << std::left << std::setw(20) << c.name << rational_list(c.row) << "\n"
       << std::setw(20) << "  difference" << rational_list(c.difference) << "\n";
  }
  for (const auto& a : r.anchor_rows) os << "anchor " << std::setw(13) << a.anchor << rational_list(a.row) << "\n";
  return os.str();
}

std::string render_audit(const RankCertificate& c, const ReconciliationReport& r, Format f) {
  if (f == Format::csv) unsupported("audit report", f);
  if (f == Format::json) {
    Json j;
    j["certificate"] = certificate_json(c);
    j["report"] = report_json(r);
    return dump(j);
  }
  return render(c, f) + "\n" + render(r, f);
}

}  // namespace rescone
