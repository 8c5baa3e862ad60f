#include "rescone/rescone.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <variant>

#include "rescone/cone_audit.hpp"
#include "rescone/error.hpp"
#include "rescone/fixtures.hpp"
#include "rescone/render.hpp"

using namespace rescone;

struct rescone_matrix {
  RatMatrix m;
};

namespace {

struct BasisResult {
  int n;
  std::vector<KapranovSymbol> symbols;
};
struct BoundaryResult {
  int n;
  std::vector<BoundarySet> sets;
};
struct GraphsResult {
  Signature mu;
  std::vector<EnhancedLevelGraph> graphs;
};
struct ResiduesResult {
  Signature mu;
  ResidueVector values;
  std::optional<std::vector<ResonanceHyperplane>> membership;
};
struct ComponentsResult {
  Signature mu;
  int components;
  bool monodromy;
};
struct AuditResult {
  RankCertificate certificate;
  std::optional<ReconciliationReport> report;
};

thread_local std::string g_error_name;
thread_local std::string g_error_message;

void clear_error() {
  g_error_name.clear();
  g_error_message.clear();
}

rescone_status fail(std::string name, std::string message, rescone_status s) {
  g_error_name = std::move(name);
  g_error_message = std::move(message);
  return s;
}

template <class F>
rescone_status guarded(F&& f) {
  clear_error();
  try {
    f();
    return RESCONE_OK;
  } catch (const Error& e) {
    return fail(std::string(e.name()), e.what(), is_usage_error(e.code()) ? RESCONE_ERR_USAGE : RESCONE_ERR_DOMAIN);
  } catch (const std::bad_alloc&) {
    return fail("out-of-memory", "out-of-memory", RESCONE_ERR_INTERNAL);
  } catch (const std::exception& e) {
    return fail("internal-error", std::string("internal-error: ") + e.what(), RESCONE_ERR_INTERNAL);
  }
}

rescone_status null_argument() { return fail("usage", "usage: null argument", RESCONE_ERR_USAGE); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Signature signature(const int* mu, std::size_t len) {
  if (!mu && len) throw Error(Errc::parse_error, "null signature");
  return Signature::validate(std::span<const int>(mu, len));
}

int default_anchor(int anchor, const Signature& mu) { return anchor == 0 ? mu.n() : anchor; }

MarkingSet marking_set(const int* v, std::size_t len, int n) {
  std::vector<int> elems(v, v + len);
  for (int x : elems)
    if (x < 1 || x > n) throw Error(Errc::invalid_boundary_set, "marking " + std::to_string(x) + " out of range");
  return MarkingSet(elems);
}

DivisorClass in_basis(const DivisorClass& c, rescone_basis_kind basis) {
  return basis == RESCONE_BASIS_KAPRANOV ? to_kapranov(c) : c;
}

}  // namespace

struct rescone_result {
  std::variant<BasisResult, BoundaryResult, DivisorClass, GraphsResult, ResiduesResult, ComponentsResult,
               AuditResult, RatMatrix>
      value;
};

namespace {

template <class T>
void emit(rescone_result** out, T value) {
  *out = new rescone_result{std::move(value)};
}

std::string render_result(const rescone_result& r, Format f) {
  struct Visitor {
    Format f;
    std::string operator()(const BasisResult& b) const { return render_basis(b.n, b.symbols, f); }
    std::string operator()(const BoundaryResult& b) const { return render_boundary(b.n, b.sets, f); }
    std::string operator()(const DivisorClass& c) const { return render(c, f); }
    std::string operator()(const GraphsResult& g) const { return render_graphs(g.mu, g.graphs, f); }
    std::string operator()(const ResiduesResult& r) const {
      return render_residues(r.mu, r.values, r.membership ? &*r.membership : nullptr, f);
    }
    std::string operator()(const ComponentsResult& c) const {
      return render_components(c.mu, c.components, c.monodromy, f);
    }
    std::string operator()(const AuditResult& a) const {
      return a.report ? render_audit(a.certificate, *a.report, f) : render(a.certificate, f);
    }
    std::string operator()(const RatMatrix& m) const { return render(m, f); }
  };
  return std::visit(Visitor{f}, r.value);
}

}  // namespace

extern "C" {

const char* rescone_version(void) { return "0.1.0"; }
const char* rescone_last_error_name(void) { return g_error_name.c_str(); }
const char* rescone_last_error_message(void) { return g_error_message.c_str(); }
void rescone_string_free(char* s) { std::free(s); }

rescone_status rescone_parse_format(const char* name, rescone_format* out) {
  if (!name || !out) return null_argument();
  return guarded([&] { *out = static_cast<rescone_format>(parse_format(name)); });
}

rescone_status rescone_matrix_from_csv(const char* text, rescone_matrix** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new rescone_matrix{parse_csv(text)}; });
}

rescone_status rescone_matrix_load_fixture(const char* name, rescone_matrix** out) {
  if (!name || !out) return null_argument();
  return guarded([&] { *out = new rescone_matrix{load_fixture(name)}; });
}

size_t rescone_matrix_rows(const rescone_matrix* m) { return m ? m->m.rows() : 0; }
size_t rescone_matrix_cols(const rescone_matrix* m) { return m ? m->m.cols() : 0; }

rescone_status rescone_matrix_rank(const rescone_matrix* m, size_t* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = rank(m->m); });
}

rescone_status rescone_matrix_kernel_dimension(const rescone_matrix* m, size_t* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = kernel_basis(m->m).size(); });
}

rescone_status rescone_matrix_entry(const rescone_matrix* m, size_t r, size_t c, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] {
    if (r >= m->m.rows() || c >= m->m.cols()) throw Error(Errc::dimension_mismatch, "entry index out of range");
    *out = copy_string(m->m(r, c).str());
  });
}

rescone_status rescone_matrix_equal(const rescone_matrix* a, const rescone_matrix* b, int* out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = a->m == b->m ? 1 : 0; });
}

rescone_status rescone_matrix_to_csv(const rescone_matrix* m, char** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = copy_string(to_csv(m->m)); });
}

void rescone_matrix_free(rescone_matrix* m) { delete m; }

rescone_status rescone_basis(int n, int boundary_sets, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] {
    if (boundary_sets)
      emit(out, BoundaryResult{n, enumerate_boundary(n)});
    else
      emit(out, BasisResult{n, kapranov_basis(n)});
  });
}

rescone_status rescone_convert(int n, const int* t, size_t t_len, rescone_result** out) {
  if (!out || (!t && t_len)) return null_argument();
  return guarded([&] {
    if (n < 5) throw Error(Errc::invalid_marking_count, "the Kapranov basis needs n >= 5");
    emit(out, boundary_to_kapranov(canonicalize(marking_set(t, t_len, n), n)));
  });
}

rescone_status rescone_dmu(const int* mu, size_t mu_len, int anchor, rescone_basis_kind basis, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    emit(out, in_basis(dmu_class(sig, default_anchor(anchor, sig)), basis));
  });
}

rescone_status rescone_dmus(const int* mu, size_t mu_len, const int* s, size_t s_len, int anchor,
                            rescone_basis_kind basis, rescone_result** out) {
  if (!out || (!s && s_len)) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    std::vector<int> elems(s, s + s_len);
    for (int x : elems)
      if (x < 1 || x > sig.n()) throw Error(Errc::invalid_s, "marking " + std::to_string(x) + " out of range");
    emit(out, in_basis(dmu_s_class(sig, MarkingSet(elems), default_anchor(anchor, sig)), basis));
  });
}

rescone_status rescone_graphs(const int* mu, size_t mu_len, int min_vertices, int max_vertices, int anchor,
                              int allow_horizontal, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    std::vector<EnhancedLevelGraph> graphs;
    if (anchor != 0) {
      for (auto& g : enumerate_lg1(sig, anchor, sig.n(), max_vertices))
        if (g.vertex_count() >= min_vertices) graphs.push_back(std::move(g));
    } else {
      graphs = enumerate_two_level(sig, EnumerationOptions{min_vertices, max_vertices, allow_horizontal != 0});
    }
    emit(out, GraphsResult{sig, std::move(graphs)});
  });
}

rescone_status rescone_residues(const int* mu, size_t mu_len, const char* const* points, size_t n_points,
                                const char* scale, int membership, rescone_result** out) {
  if (!out || (!points && n_points)) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    std::vector<Rational> pts;
    for (size_t i = 0; i < n_points; ++i) {
      if (!points[i]) throw Error(Errc::parse_error, "null point");
      pts.push_back(Rational::parse(points[i]));
    }
    const Rational lambda = scale ? Rational::parse(scale) : Rational(1);
    ResidueVector values = residues_at(sig, pts, lambda);
    std::optional<std::vector<ResonanceHyperplane>> hs;
    if (membership) hs = resonance_membership(values);
    emit(out, ResiduesResult{sig, std::move(values), std::move(hs)});
  });
}

rescone_status rescone_components(const int* mu, size_t mu_len, int monodromy, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    const int k = fiber_components(sig);
    if (monodromy) monodromy_sign(sig, resonance_hyperplanes(sig.pole_count()).front());
    emit(out, ComponentsResult{sig, k, monodromy != 0});
  });
}

rescone_status rescone_audit(const int* mu, size_t mu_len, int report, int anchor, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] {
    const Signature sig = signature(mu, mu_len);
    AuditResult a{corank_certificate(sig, sig.n()), std::nullopt};
    if (report) a.report = reconciliation_report(sig, sig.n(), default_anchor(anchor, sig));
    emit(out, std::move(a));
  });
}

rescone_status rescone_fixture(const char* name, rescone_result** out) {
  if (!out) return null_argument();
  return guarded([&] { emit(out, load_fixture(name ? name : kRankFixture)); });
}

rescone_status rescone_result_render(const rescone_result* r, rescone_format format, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    if (format < RESCONE_FORMAT_JSON || format > RESCONE_FORMAT_CSV)
      throw Error(Errc::unsupported_format, "unknown format code");
    *out = copy_string(render_result(*r, static_cast<Format>(format)));
  });
}

rescone_status rescone_result_matrix(const rescone_result* r, rescone_matrix** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    if (const auto* a = std::get_if<AuditResult>(&r->value))
      *out = new rescone_matrix{a->certificate.matrix};
    else if (const auto* m = std::get_if<RatMatrix>(&r->value))
      *out = new rescone_matrix{*m};
    else
      throw Error(Errc::unsupported_format, "result carries no matrix");
  });
}

rescone_status rescone_certificate_field(const rescone_result* r, const char* field, long* out) {
  if (!r || !field || !out) return null_argument();
  return guarded([&] {
    const auto* a = std::get_if<AuditResult>(&r->value);
    if (!a) throw Error(Errc::unsupported_format, "result is not a certificate");
    const RankCertificate& c = a->certificate;
    const std::string f = field;
    if (f == "n") *out = c.n;
    else if (f == "rho") *out = c.rho;
    else if (f == "kept") *out = static_cast<long>(c.kept.size());
    else if (f == "killed_count") *out = c.killed_count;
    else if (f == "matrix_rank") *out = c.matrix_rank;
    else if (f == "contracted_span_rank") *out = c.contracted_span_rank;
    else if (f == "corank") *out = c.corank;
    else if (f == "boundary_rows_rank") *out = c.boundary_rows_rank;
    else if (f == "polyhedral") *out = c.verdict == Verdict::polyhedral_at_ray ? 1 : 0;
    else throw Error(Errc::parse_error, "unknown certificate field '" + f + "'");
  });
}

rescone_status rescone_result_size(const rescone_result* r, size_t* out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    struct Visitor {
      size_t operator()(const BasisResult& b) const { return b.symbols.size(); }
      size_t operator()(const BoundaryResult& b) const { return b.sets.size(); }
      size_t operator()(const DivisorClass& c) const { return c.size(); }
      size_t operator()(const GraphsResult& g) const { return g.graphs.size(); }
      size_t operator()(const ResiduesResult& r) const { return r.values.size(); }
      size_t operator()(const ComponentsResult&) const { return 1; }
      size_t operator()(const AuditResult& a) const { return a.certificate.kept.size(); }
      size_t operator()(const RatMatrix& m) const { return m.rows(); }
    };
    *out = std::visit(Visitor{}, r->value);
  });
}

void rescone_result_free(rescone_result* r) { delete r; }

}  // extern "C"
