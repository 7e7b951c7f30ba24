// qtangle: evaluate sliced tangle diagrams, compute link invariants, run the
// property suites and KZ transport experiments.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "input.hpp"
#include "qtangle/cobord1.hpp"
#include "qtangle/evaluator.hpp"
#include "qtangle/kz.hpp"
#include "qtangle/parser.hpp"
#include "suites.hpp"

namespace {

using namespace qtangle;
using namespace qtangle::cli;
using Json = nlohmann::ordered_json;

void add_diagram_options(CLI::App* cmd, DiagramInput& in, bool with_closure = true) {
  cmd->add_option("--braid", in.braid, "Inline braid, e.g. \"braid n=2: 1 1 1\"");
  cmd->add_option("--braid-file", in.braid_file, "Braid file");
  cmd->add_option("--sliced", in.sliced_file, "Sliced diagram file (.brd files are read as braids)");
  cmd->add_option("--sliced-text", in.sliced_text, "Inline sliced diagram");
  if (with_closure) {
    cmd->add_option("--closure", in.closure, "Close the diagram first")
        ->check(CLI::IsMember({"none", "trace", "plat"}))
        ->capture_default_str();
  }
}

Json matrix_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  Json j;
  j["schema"] = 1;
  j["variable"] = m.variable();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = std::move(rows);
  if (m.rows() == 1 && m.cols() == 1) j["value"] = m(0, 0).to_string();
  return j;
}

void print_matrix(const RingMatrix& m, const std::string& format) {
  if (format == "json") {
    std::cout << matrix_json(m).dump() << "\n";
  } else if (m.rows() == 1 && m.cols() == 1) {
    std::cout << m(0, 0).to_string() << "\n";
  } else {
    std::cout << m.to_string();
  }
}

struct EvalArgs {
  DiagramInput in;
  std::string cob;
  std::size_t dim = 2;
  std::string theory = "kauffman";
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a) {
  if (!a.cob.empty()) {
    if (a.in.given()) throw UsageError("--1cob cannot be combined with a diagram input");
    const Matching1 m = [&] {
      try {
        return parse_matching1(a.cob);
      } catch (const ParseError& e) {
        throw LocatedError("<1cob>", e);
      }
    }();
    print_matrix(tqft1_eval(m, a.dim), a.format);
    return kExitOk;
  }
  const SlicedDiagram d = load_diagram(a.in);
  print_matrix(eval(d, default_theory()), a.format);
  return kExitOk;
}

struct InvariantArgs {
  DiagramInput in;
  std::string var = "q";
  int divisor = -4;
  std::string format = "text";
};

int cmd_invariant(const InvariantArgs& a) {
  const SlicedDiagram d = load_diagram(a.in);
  if (!d.is_closed()) {
    throw DiagramError("the diagram is not closed (source " + d.source().to_string() + ", target " +
                       d.target().to_string() + "); pass --closure trace or --closure plat");
  }
  const LinkInvariantReport r = link_invariant(d, default_theory(), a.var, a.divisor);
  if (a.format == "json") {
    std::cout << r.to_json() << "\n";
  } else {
    std::cout << "bracket: " << r.bracket.to_string() << "\n"
              << "writhe: " << r.writhe << "\n"
              << "normalized: " << r.normalized.to_string() << "\n"
              << "variable: " << r.variable_out << "\n";
  }
  return kExitOk;
}

struct CheckArgs {
  std::string suite;
  std::size_t samples = 0;
  std::optional<std::uint64_t> seed;
  std::size_t max_crossings = 6;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TANGLE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("TANGLE_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 1;
}

int cmd_check(const CheckArgs& a) {
  SuiteOptions o;
  o.samples = a.samples;
  o.seed = a.seed ? *a.seed : default_seed();
  o.max_crossings = a.max_crossings;
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(a.suite);
  }
  bool pass = true;
  for (const auto& s : suites) {
    const SuiteReport r = run_suite(s, o);
    std::cout << "[" << s << "]\n";
    for (const auto& line : r.lines) std::cout << line << "\n";
    std::cout << (r.pass ? "suite passed" : "suite FAILED") << "\n";
    pass = pass && r.pass;
  }
  return pass ? kExitOk : kExitCheckFailed;
}

struct KzArgs {
  std::string braid = "braid n=2: 1";
  std::string braid_file;
  double h = 0.1;
  std::size_t steps = 256;
  bool relation = false;
  double tol = 1e-6;
  std::size_t n = 3;
};

int cmd_kz(const KzArgs& a) {
  Json j;
  j["schema"] = 1;
  if (a.relation) {
    const BraidRelationReport r = braid_relation_check(KZConfig::standard(a.n, a.h), a.tol, a.steps);
    j["relation"] = "1 2 1 = 2 1 2";
    j["n"] = a.n;
    j["h"] = a.h;
    j["difference"] = r.difference;
    j["tolerance"] = r.tolerance;
    j["error_estimate"] = r.error_estimate;
    j["steps"] = a.steps;
    j["pass"] = r.pass;
    std::cout << j.dump() << "\n";
    return r.pass ? kExitOk : kExitCheckFailed;
  }
  const BraidWord b = load_braid(a.braid, a.braid_file);
  const TransportResult t = transport_word(b.letters, KZConfig::standard(b.n_strands, a.h), a.steps);
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < t.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < t.matrix.cols(); ++c) {
      entries.push_back(Json::array({t.matrix(r, c).real(), t.matrix(r, c).imag()}));
    }
  }
  j["dim"] = t.matrix.rows();
  j["transport"] = std::move(entries);
  j["error_estimate"] = t.error_estimate;
  j["steps"] = t.steps;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

struct ParseArgs {
  DiagramInput in;
  std::string cob;
  bool to_sliced = false;
};

int cmd_parse(const ParseArgs& a) {
  if (!a.cob.empty()) {
    try {
      std::cout << serialize_matching1(parse_matching1(a.cob)) << "\n";
    } catch (const ParseError& e) {
      throw LocatedError("<1cob>", e);
    }
    return kExitOk;
  }
  const bool braid_input = !a.in.braid.empty() || !a.in.braid_file.empty() ||
                           (!a.in.sliced_file.empty() && read_diagram_file(a.in.sliced_file).format == DiagramFormat::Braid);
  if (braid_input && !a.to_sliced && a.in.closure == "none") {
    const std::string file = !a.in.braid_file.empty() ? a.in.braid_file : a.in.sliced_file;
    std::cout << serialize_braid(load_braid(a.in.braid, file)) << "\n";
    return kExitOk;
  }
  std::cout << serialize(load_diagram(a.in)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliced tangle evaluation, link invariants and KZ transport"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a diagram (or a 1-cobordism) to a matrix");
  add_diagram_options(eval_cmd, eval_args.in);
  eval_cmd->add_option("--1cob", eval_args.cob, "Inline 1-cobordism for the 1-dimensional TQFT");
  eval_cmd->add_option("--dim", eval_args.dim, "Strand space dimension for --1cob")->capture_default_str();
  eval_cmd->add_option("--theory", eval_args.theory, "Tangle functor")
      ->check(CLI::IsMember({"kauffman"}))
      ->capture_default_str();
  eval_cmd->add_option("--format", eval_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  InvariantArgs inv_args;
  auto* inv_cmd = app.add_subcommand("invariant", "Writhe- and unknot-normalized link invariant");
  add_diagram_options(inv_cmd, inv_args.in);
  inv_cmd->add_option("--var", inv_args.var, "Report variable")->capture_default_str();
  inv_cmd->add_option("--divisor", inv_args.divisor, "A^e is reported as var^(e / divisor); 0 keeps A")
      ->capture_default_str();
  inv_cmd->add_option("--format", inv_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check_cmd->add_option("--suite", check_args.suite)->required()->check(CLI::IsMember(suites));
  check_cmd->add_option("--samples", check_args.samples, "Random cases (0: suite default)");
  check_cmd->add_option("--seed", check_args.seed, "Seed (default: $TANGLE_SEED, else 1)");
  check_cmd->add_option("--max-crossings", check_args.max_crossings, "Longest braid word for the oracle suite")
      ->capture_default_str();

  KzArgs kz_args;
  auto* kz_cmd = app.add_subcommand("kz", "KZ parallel transport along a braid");
  kz_cmd->set_help_flag("--help", "Print this help message and exit");
  kz_cmd->add_option("--braid", kz_args.braid)->capture_default_str();
  kz_cmd->add_option("--braid-file", kz_args.braid_file);
  kz_cmd->add_option("--h", kz_args.h, "Coupling")->capture_default_str();
  kz_cmd->add_option("--steps", kz_args.steps, "RK4 steps per segment")->capture_default_str();
  kz_cmd->add_flag("--relation", kz_args.relation, "Compare 1 2 1 with 2 1 2");
  kz_cmd->add_option("--tol", kz_args.tol)->capture_default_str();
  kz_cmd->add_option("--n", kz_args.n, "Strands for --relation")->capture_default_str();

  ParseArgs parse_args;
  auto* parse_cmd = app.add_subcommand("parse", "Parse, validate and print canonical text");
  add_diagram_options(parse_cmd, parse_args.in);
  parse_cmd->add_option("--1cob", parse_args.cob);
  parse_cmd->add_flag("--to-sliced", parse_args.to_sliced, "Print braids in sliced form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_args);
    if (inv_cmd->parsed()) return cmd_invariant(inv_args);
    if (check_cmd->parsed()) return cmd_check(check_args);
    if (kz_cmd->parsed()) return cmd_kz(kz_args);
    if (parse_cmd->parsed()) return cmd_parse(parse_args);
  } catch (...) {
    return report_current_exception();
  }
  return kExitUsage;
}
