// Command-line front end over the rescone C API.
#include <rescone/rescone.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (!s.empty() && s.back() == ',') out.emplace_back();
  return out;
}

std::vector<int> int_list(const std::string& flag, const std::string& s) {
  std::vector<int> out;
  for (const auto& tok : split(s)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw UsageError(flag + ": expected a comma-separated integer list, got '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

struct ResultDeleter {
  void operator()(rescone_result* r) const { rescone_result_free(r); }
};
using ResultPtr = std::unique_ptr<rescone_result, ResultDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rescone_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Status from the library mapped to an exit code, with the error on stderr.
int report(rescone_status s) {
  std::cerr << "rescone: " << rescone_last_error_message() << "\n";
  if (s == RESCONE_ERR_USAGE) return kExitUsage;
  if (s == RESCONE_ERR_DOMAIN) return kExitDomain;
  return 1;
}

struct Options {
  std::string format = "json";
  std::string output;
  int n = 0;
  bool boundary = false;
  std::string delta, mu, s, points, scale, basis = "boundary", emit_matrix, fixture_name = "rankup-22x22";
  int anchor = 0;
  int min_vertices = 2, max_vertices = 6;
  bool horizontal = false, membership = false, monodromy = false, with_report = false;
};

int write_output(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return 0;
  }
  std::ofstream f(o.output, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "rescone: cannot write '" << o.output << "'\n";
    return 1;
  }
  return 0;
}

int run(const std::string& cmd, const Options& o) {
  rescone_format fmt{};
  if (rescone_status s = rescone_parse_format(o.format.c_str(), &fmt)) return report(s);

  rescone_result* raw = nullptr;
  rescone_status s = RESCONE_OK;
  const auto basis = [&] {
    if (o.basis == "boundary") return RESCONE_BASIS_BOUNDARY;
    if (o.basis == "kapranov") return RESCONE_BASIS_KAPRANOV;
    throw UsageError("--basis: expected boundary or kapranov");
  };

  if (cmd == "basis") {
    s = rescone_basis(o.n, o.boundary, &raw);
  } else if (cmd == "convert") {
    const auto t = int_list("--delta", o.delta);
    s = rescone_convert(o.n, t.data(), t.size(), &raw);
  } else if (cmd == "dmu") {
    const auto mu = int_list("--mu", o.mu);
    s = rescone_dmu(mu.data(), mu.size(), o.anchor, basis(), &raw);
  } else if (cmd == "dmus") {
    const auto mu = int_list("--mu", o.mu);
    const auto set = int_list("--s", o.s);
    s = rescone_dmus(mu.data(), mu.size(), set.data(), set.size(), o.anchor, basis(), &raw);
  } else if (cmd == "graphs") {
    const auto mu = int_list("--mu", o.mu);
    s = rescone_graphs(mu.data(), mu.size(), o.min_vertices, o.max_vertices, o.anchor, o.horizontal, &raw);
  } else if (cmd == "residues") {
    const auto mu = int_list("--mu", o.mu);
    const auto pts = split(o.points);
    std::vector<const char*> ptrs;
    for (const auto& p : pts) ptrs.push_back(p.c_str());
    s = rescone_residues(mu.data(), mu.size(), ptrs.data(), ptrs.size(), o.scale.empty() ? nullptr : o.scale.c_str(),
                         o.membership, &raw);
  } else if (cmd == "components") {
    const auto mu = int_list("--mu", o.mu);
    s = rescone_components(mu.data(), mu.size(), o.monodromy, &raw);
  } else if (cmd == "audit") {
    const auto mu = int_list("--mu", o.mu);
    s = rescone_audit(mu.data(), mu.size(), o.with_report, o.anchor, &raw);
  } else if (cmd == "fixture") {
    s = rescone_fixture(o.fixture_name.c_str(), &raw);
  }
  if (s != RESCONE_OK) return report(s);
  ResultPtr result(raw);

  if (!o.emit_matrix.empty()) {
    rescone_matrix* m = nullptr;
    if (rescone_status ms = rescone_result_matrix(result.get(), &m)) return report(ms);
    char* csv = nullptr;
    const rescone_status cs = rescone_matrix_to_csv(m, &csv);
    rescone_matrix_free(m);
    if (cs != RESCONE_OK) return report(cs);
    StringPtr text(csv);
    std::ofstream f(o.emit_matrix, std::ios::binary);
    f << text.get();
    if (!f) {
      std::cerr << "rescone: cannot write '" << o.emit_matrix << "'\n";
      return 1;
    }
  }

  char* rendered = nullptr;
  if (rescone_status rs = rescone_result_render(result.get(), fmt, &rendered)) return report(rs);
  StringPtr text(rendered);
  return write_output(o, text.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor-class, level-graph and residue computations on M_{0,n}-bar", "rescone"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format: json, table or csv")->capture_default_str();
  app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");

  auto* basis = app.add_subcommand("basis", "List the Kapranov basis (or the boundary divisors)");
  basis->add_option("--n", o.n, "Number of markings")->required();
  basis->add_flag("--boundary", o.boundary, "List the boundary divisors instead");

  auto* convert = app.add_subcommand("convert", "Expand a boundary divisor in the Kapranov basis");
  convert->add_option("--n", o.n, "Number of markings")->required();
  convert->add_option("--delta", o.delta, "Marking set T, e.g. 3,4")->required();

  auto* dmu = app.add_subcommand("dmu", "Residue-map divisor class D^mu");
  dmu->add_option("--mu", o.mu, "Signature as a comma-separated list, e.g. 2,2,-1,-1,-1,-1,-1,-1")->required();
  dmu->add_option("--anchor", o.anchor, "Anchor marking (default: last)");
  dmu->add_option("--basis", o.basis, "boundary or kapranov")->capture_default_str();

  auto* dmus = app.add_subcommand("dmus", "Restricted residue-map class D^mu_S");
  dmus->add_option("--mu", o.mu, "Signature")->required();
  dmus->add_option("--s", o.s, "Pole subset S, e.g. 3,4")->required();
  dmus->add_option("--anchor", o.anchor, "Anchor marking (default: last)");
  dmus->add_option("--basis", o.basis, "boundary or kapranov")->capture_default_str();

  auto* graphs = app.add_subcommand("graphs", "Enumerate enhanced two-level graphs");
  graphs->add_option("--mu", o.mu, "Signature")->required();
  graphs->add_option("--min-vertices", o.min_vertices, "Minimum vertex count")->capture_default_str();
  graphs->add_option("--max-vertices", o.max_vertices, "Maximum vertex count")->capture_default_str();
  graphs->add_option("--anchor", o.anchor, "Only graphs with this pole below the top level");
  graphs->add_flag("--horizontal", o.horizontal, "Allow horizontal edges");

  auto* residues = app.add_subcommand("residues", "Residues of the differential at given points");
  residues->add_option("--mu", o.mu, "Signature")->required();
  residues->add_option("--points", o.points, "One rational point per marking, e.g. 0,1,2,3,4,5")->required();
  residues->add_option("--scale", o.scale, "Scale factor for the differential");
  residues->add_flag("--membership", o.membership, "Also list the resonance hyperplanes containing the vector");

  auto* components = app.add_subcommand("components", "Connected components of the residue fibre");
  components->add_option("--mu", o.mu, "Signature")->required();
  components->add_flag("--monodromy", o.monodromy, "Also list the monodromy sign of each resonance hyperplane");

  auto* audit = app.add_subcommand("audit", "Rank/corank certificate for the residue-map class");
  audit->add_option("--mu", o.mu, "Signature")->required();
  audit->add_option("--emit-matrix", o.emit_matrix, "Write the audit matrix as CSV to PATH");
  audit->add_flag("--report", o.with_report, "Include the reconciliation report");
  audit->add_option("--anchor", o.anchor, "Anchor for the reconciliation report (default: last)");

  auto* fixture = app.add_subcommand("fixture", "Print a shipped matrix fixture");
  fixture->add_option("--name", o.fixture_name, "Fixture name")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rescone: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "rescone: usage: " << e.what() << "\n";
    return kExitUsage;
  }
}
