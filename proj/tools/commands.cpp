#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wonderful/checks.hpp"
#include "wonderful/group_spec.hpp"

namespace orbits_cli {

namespace {

using namespace wonderful;
using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 12345;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupOptions {
  std::string type;
  std::string spec;
  std::string weights;
  std::size_t cap = 0;
};

void add_group_options(CLI::App* cmd, GroupOptions& g) {
  auto* type = cmd->add_option("--type", g.type, "Named type such as A2, B3 or A1xG2");
  auto* spec = cmd->add_option("--spec", g.spec, "Group spec as a JSON file path or inline JSON object");
  type->excludes(spec);
  cmd->add_option("--weights", g.weights, "Weight overrides as JSON, e.g. {\"1\":2}");
  cmd->add_option("--cap", g.cap, "Group-size cap (default: ORBITS_CAP or 1000000)")->check(CLI::PositiveNumber);
}

std::string read_spec_text(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return spec;
  std::ifstream in(spec);
  if (!in) throw ConfigError("cannot read group spec file '" + spec + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GroupSpec resolve_spec(const GroupOptions& g) {
  if (g.type.empty() == g.spec.empty()) throw ConfigError("give exactly one of --type and --spec");
  GroupSpec spec = g.type.empty() ? parse_group_spec(read_spec_text(g.spec)) : group_spec_from_type(g.type);
  if (!g.weights.empty()) apply_weight_overrides(spec, g.weights);
  return spec;
}

OrbitCalculus resolve_calculus(const GroupOptions& g) {
  Caps caps;
  if (g.cap > 0) caps.group = g.cap;
  return make_calculus(resolve_spec(g), caps);
}

SimpleSubset resolve_stratum(const OrbitCalculus& calc, const std::string& text) {
  try {
    return parse_subset(text, calc.rank());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

json check_json(const CheckResult& r) {
  return {{"name", r.name},
          {"status", r.passed() ? "PASS" : "FAIL"},
          {"cases", r.cases},
          {"failed", r.failed},
          {"failures", r.failures}};
}

// Type A_{n-1} with unit weights, for the matrix suite.
std::optional<int> matrix_rank(const GroupSpec& spec, const OrbitCalculus& calc) {
  if (!calc.is_split_model()) return std::nullopt;
  for (int n : {2, 3})
    if (spec.cartan == cartan_of_type("A" + std::to_string(n - 1))) return n;
  return std::nullopt;
}

int cmd_enumerate(const GroupOptions& g, const std::string& stratum, const std::string& format, std::ostream& out) {
  const OrbitCalculus calc = resolve_calculus(g);
  std::optional<SimpleSubset> J;
  if (stratum != "all") J = resolve_stratum(calc, stratum);
  if (format == "csv") {
    out << to_csv(calc);
    return kSuccess;
  }
  const std::vector<OrbitLabel> labels = calc.enumerate_orbits(J);
  if (format == "json") {
    json doc = json::array();
    for (const OrbitLabel& o : labels) {
      json entry = {{"label", calc.format(o)}, {"stratum", to_string(o.stratum)}, {"codim", calc.codim(o)}};
      if (calc.is_split_model()) {
        entry["dimension"] = calc.split_dimension(o);
        entry["points"] = calc.point_count_poly(o).to_string();
      }
      doc.push_back(entry);
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  for (const OrbitLabel& o : labels) out << calc.format(o) << '\n';
  return kSuccess;
}

int cmd_poset(const GroupOptions& g, const std::string& format, bool serial, std::ostream& out) {
  const OrbitCalculus calc = resolve_calculus(g);
  if (format == "csv") {
    out << to_csv(calc);
    return kSuccess;
  }
  const ClosurePoset poset = closure_poset(calc, serial ? Execution::Serial : Execution::Parallel);
  out << (format == "dot" ? to_dot(poset, calc) : to_json(poset, calc));
  return kSuccess;
}

std::string witness_text(const OrbitCalculus& calc, const ClosureWitness& w) {
  return " u=" + calc.group().word_string(w.u) + " v=" + calc.group().word_string(w.v);
}

int cmd_compare(const GroupOptions& g, const std::string& first, const std::string& second, std::ostream& out) {
  const OrbitCalculus calc = resolve_calculus(g);
  const OrbitLabel a = calc.parse(first);
  const OrbitLabel b = calc.parse(second);
  if (a == b) {
    out << "EQUAL\n";
    return kSuccess;
  }
  if (const auto w = calc.closure_witness(a, b)) {
    out << "LEQ" << witness_text(calc, *w) << '\n';
  } else if (const auto w2 = calc.closure_witness(b, a)) {
    out << "GEQ" << witness_text(calc, *w2) << '\n';
  } else {
    out << "INCOMPARABLE\n";
  }
  return kSuccess;
}

int cmd_components(const GroupOptions& g, const std::string& label, const std::string& stratum, std::ostream& out) {
  const OrbitCalculus calc = resolve_calculus(g);
  const OrbitLabel o = calc.parse(label);
  for (const OrbitLabel& c : calc.intersection_components(o, resolve_stratum(calc, stratum)))
    out << calc.format(c) << '\n';
  return kSuccess;
}

int cmd_verify(const GroupOptions& g, const std::string& suite, std::optional<std::uint64_t> seed_flag,
               std::size_t samples, bool inject_fault, std::ostream& out) {
  const GroupSpec spec = resolve_spec(g);
  Caps caps;
  if (g.cap > 0) caps.group = g.cap;
  const OrbitCalculus calc = make_calculus(spec, caps);
  std::uint64_t seed = kDefaultSeed;
  if (seed_flag) {
    seed = *seed_flag;
  } else if (const char* env = std::getenv("ORBITS_SEED")) {
    seed = std::strtoull(env, nullptr, 10);
  }

  const bool all = suite == "all";
  std::vector<CheckResult> results;
  json skipped = json::array();
  if (all || suite == "poset") results.push_back(check_poset_oracle(calc, inject_fault));
  if (all || suite == "axioms") {
    results.push_back(check_partial_order(calc));
    results.push_back(check_stratum_order(calc));
    results.push_back(check_components(calc));
    results.push_back(check_weighted_length(calc));
  }
  if (all || suite == "bruhat") {
    results.push_back(check_bruhat_subword(calc.group()));
    results.push_back(check_cosets(calc.group()));
  }
  if (all || suite == "rank1") results.push_back(check_rank1(calc));
  if (all || suite == "labels") results.push_back(check_labels(calc, seed, samples));
  if (all || suite == "matrix") {
    if (const auto n = matrix_rank(spec, calc)) {
      for (int q : {2, 3}) results.push_back(check_matrix_model(*n, q));
    } else {
      skipped.push_back("matrix: needs unit-weight type A1 or A2");
    }
  }

  bool passed = true;
  json report = {{"group", spec.name}, {"seed", seed}, {"checks", json::array()}, {"skipped", skipped}};
  for (const CheckResult& r : results) {
    passed = passed && r.passed();
    report["checks"].push_back(check_json(r));
  }
  report["status"] = passed ? "PASS" : "FAIL";
  out << (passed ? "PASS" : "FAIL") << '\n' << report.dump(2) << '\n';
  return passed ? kSuccess : kVerificationFailed;
}

json matrix_json(const FqMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

int cmd_matrix(int n, int q, const std::string& space_name, const std::string& dump, bool serial, std::ostream& out) {
  const MatrixSpace space =
      space_name == "matrices" ? MatrixSpace::ProjectiveMatrices : MatrixSpace::CompleteCollineations;
  std::optional<MatrixModel> model;
  try {
    model.emplace(n, q, space);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const OrbitCalculus calc = type_a_calculus(n);
  const OrbitPartition partition = orbit_partition(*model, serial ? Execution::Serial : Execution::Parallel);
  out << "points " << model->size() << '\n';
  out << "orbits " << partition.orbits.size() << '\n';
  out << "labels " << calc.orbit_count() << '\n';

  std::int64_t predicted = 0;
  for (const OrbitLabel& o : calc.enumerate_orbits()) predicted += calc.point_count_poly(o).evaluate(q);
  out << "predicted points " << predicted << '\n';

  std::optional<LabelMatching> matching;
  bool ok = true;
  if (space == MatrixSpace::CompleteCollineations || n == 2) {
    matching = label_matching(calc, *model, partition);
    const CellReport cells = verify_group_cells(calc, *model, partition);
    out << "bijection " << (matching->bijective() ? "yes" : "no") << '\n';
    out << "orbit sizes " << (matching->size_mismatches.empty() ? "match" : "differ") << '\n';
    out << "group cells " << cells.group_orbits << " orbits, " << cells.group_points << " points"
        << (cells.ok() ? "" : " (mismatch)") << '\n';
    for (const auto& group : matching->collisions) {
      out << "collision:";
      for (std::size_t l : group) out << ' ' << calc.format(matching->labels[l]);
      out << '\n';
    }
    for (const std::string& p : cells.problems) out << "cell problem: " << p << '\n';
    ok = matching->ok() && cells.ok() && predicted == static_cast<std::int64_t>(model->size());
  } else {
    out << "bijection skipped (P(M_n) is not the compactification for n > 2)\n";
  }

  if (!dump.empty()) {
    json doc = {{"n", n}, {"q", q}, {"space", space_name}, {"points", model->size()}, {"orbits", json::array()}};
    std::vector<std::string> names(partition.orbits.size());
    if (matching)
      for (std::size_t l = 0; l < matching->labels.size(); ++l)
        names[matching->orbit_of_label[l]] = calc.format(matching->labels[l]);
    for (std::size_t o = 0; o < partition.orbits.size(); ++o) {
      json rep = json::array();
      for (const FqMatrix& c : model->point(partition.orbits[o].front()).components) rep.push_back(matrix_json(c));
      doc["orbits"].push_back({{"label", names[o].empty() ? json(nullptr) : json(names[o])},
                               {"size", partition.orbits[o].size()},
                               {"representative", rep}});
    }
    std::ofstream file(dump);
    if (!file) throw ConfigError("cannot write '" + dump + "'");
    file << doc.dump(2) << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit combinatorics of wonderful group compactifications", "orbits"};
  app.require_subcommand(1);

  GroupOptions group;
  std::string stratum = "all";
  std::string format;
  bool serial = false;
  std::string first_label, second_label;
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  std::size_t samples = 2000;
  bool inject_fault = false;
  int n = 2, q = 2;
  std::string space = "collineations";
  std::string dump;

  auto* enumerate = app.add_subcommand("enumerate", "List orbit labels");
  add_group_options(enumerate, group);
  enumerate->add_option("--stratum", stratum, "Restrict to one stratum, e.g. [] or [1,2]");
  enumerate->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->default_str("text");

  auto* poset = app.add_subcommand("poset", "Closure poset with its Hasse diagram");
  add_group_options(poset, group);
  poset->add_option("--format", format, "json, dot or csv")->check(CLI::IsMember({"json", "dot", "csv"}));
  poset->add_flag("--serial", serial, "Use the serial reference kernel");

  auto* compare = app.add_subcommand("compare", "Compare two orbits in the closure order");
  add_group_options(compare, group);
  compare->add_option("first", first_label, "Label such as I=[1];sigma=e;tau=2;rho=1")->required();
  compare->add_option("second", second_label, "Second label")->required();

  auto* components = app.add_subcommand("components", "Components of an orbit closure met with a stratum closure");
  add_group_options(components, group);
  components->add_option("label", first_label, "Orbit label")->required();
  components->add_option("--stratum", stratum, "Target stratum, e.g. []")->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_group_options(verify, group);
  verify->add_option("--suite", suite, "all, poset, axioms, bruhat, rank1, labels or matrix")
      ->check(CLI::IsMember({"all", "poset", "axioms", "bruhat", "rank1", "labels", "matrix"}));
  verify->add_option("--seed", seed, "Seed for sampled checks (default: ORBITS_SEED or 12345)");
  verify->add_option("--samples", samples, "Samples for randomized checks");
  verify->add_flag("--inject-fault", inject_fault, "Drop one relation from the formula poset");

  auto* matrix = app.add_subcommand("matrix", "Brute-force PGL_n model over F_q");
  matrix->add_option("--n", n, "Matrix size")->check(CLI::Range(2, 5));
  matrix->add_option("--q", q, "Prime field order")->check(CLI::Range(2, 251));
  matrix->add_option("--space", space, "collineations or matrices")
      ->check(CLI::IsMember({"collineations", "matrices"}));
  matrix->add_option("--dump", dump, "Write orbits with labels and representatives as JSON");
  matrix->add_flag("--serial", serial, "Use the serial reference kernel");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kConfigError;
  }

  try {
    if (*enumerate) return cmd_enumerate(group, stratum, format.empty() ? "text" : format, out);
    if (*poset) return cmd_poset(group, format.empty() ? "json" : format, serial, out);
    if (*compare) return cmd_compare(group, first_label, second_label, out);
    if (*components) return cmd_components(group, first_label, stratum, out);
    if (*verify) return cmd_verify(group, suite, seed, samples, inject_fault, out);
    if (*matrix) return cmd_matrix(n, q, space, dump, serial, out);
  } catch (const LabelError& e) {
    err << "error: " << e.what() << '\n';
    if (!e.suggestion.empty()) err << "canonical form: " << e.suggestion << '\n';
    return kLabelError;
  } catch (const std::exception& e) {
    // Spec, cap and precondition failures are configuration errors.
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace orbits_cli
