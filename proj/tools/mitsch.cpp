// Command-line front end: run verification suites over B_n / P_n, test
// order predicates on elements read from files, and emit Hasse diagrams
// of the generated preorder sublattice.
//
// Exit codes: 0 on success, 1 when a sweep finds verified failures,
// 2 on usage, guard, or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mitsch/lattice.hpp"
#include "mitsch/partition_orders.hpp"
#include "mitsch/relation_orders.hpp"
#include "mitsch/suites.hpp"

namespace {

using namespace mitsch;

UniverseKind parse_kind(const std::string& s) {
  if (s == "relations") return UniverseKind::relations;
  if (s == "partitions") return UniverseKind::partitions;
  throw CLI::ValidationError("--universe must be 'relations' or 'partitions'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Element files are self-describing: a relation file starts with a size
// line followed by 0/1 rows; a partition file is a single block line.
bool looks_like_partition(const std::string& text) {
  return text.find('\'') != std::string::npos ||
         text.find('|') != std::string::npos;
}

int cmd_check(const std::string& suite, const std::string& universe, int n,
              uint64_t sample, uint64_t seed, const std::string& report_path,
              bool force) {
  UniverseKind kind = parse_kind(universe);
  if (n < 0 || (n > 3 && !force)) {
    std::cerr << "error: n=" << n << " exceeds the sweep guard (use --force-large)\n";
    return 2;
  }
  CheckReport rep = run_suite(suite, kind, n, sample, seed, force);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write '" << report_path << "'\n";
      return 2;
    }
    out << rep.to_text();
  } else {
    std::cout << rep.to_text();
  }
  std::cout << "suite " << suite << " on " << universe << " n=" << n << ": "
            << (rep.passed() ? "passed" : "FAILED") << " (checked "
            << rep.checked << ", " << rep.failures.size() << " failures, "
            << rep.wall_ms << " ms)\n";
  return rep.passed() ? 0 : 1;
}

int order_on_relations(const std::string& pred, const Relation& a,
                       const Relation& b) {
  bool verdict;
  if (pred == "mitsch")
    verdict = mitsch_le(a, b);
  else if (pred == "mitsch-oracle")
    verdict = mitsch_le_oracle(a, b);
  else if (pred == "incl")
    verdict = is_subset(a, b);
  else if (pred == "rincl")
    verdict = is_subset(b, a);
  else if (pred == "meet-incl")
    verdict = meet_with_inclusion(a, b);
  else if (pred == "meet-rev") {
    auto w = meet_rev_witnesses(a, b);
    std::cout << (w ? "true" : "false") << '\n';
    if (w) {
      std::cout << "epsilon:\n" << w->epsilon.to_text();
      std::cout << "phi:\n" << w->phi.to_text();
    }
    return 0;
  } else if (pred == "incl-then-le")
    verdict = comp_subset_then_le(a, b);
  else if (pred == "rincl-then-le")
    verdict = comp_supset_then_le(a, b);
  else if (pred == "divides-right")
    verdict = divides_right(b, a);
  else if (pred == "divides-left")
    verdict = divides_left(b, a);
  else
    throw std::invalid_argument("unknown predicate '" + pred +
                                "' for relations");
  std::cout << (verdict ? "true" : "false") << '\n';
  return 0;
}

int order_on_partitions(const std::string& pred, const Partition& a,
                        const Partition& b) {
  bool verdict;
  if (pred == "mitsch" || pred == "mitsch-oracle")
    verdict = mitsch_le_oracle(a, b);
  else if (pred == "mitsch-fast")
    verdict = mitsch_le_fast(a, b);
  else if (pred == "incl")
    verdict = refinement_le(a, b);
  else if (pred == "rincl")
    verdict = refinement_le(b, a);
  else if (pred == "incl-then-le")
    verdict = comp_subset_then_le(a, b);
  else if (pred == "rincl-then-le")
    verdict = comp_supset_then_le(a, b);
  else
    throw std::invalid_argument("unknown predicate '" + pred +
                                "' for partitions");
  std::cout << (verdict ? "true" : "false") << '\n';
  return 0;
}

int cmd_order(const std::string& pred, const std::string& file_a,
              const std::string& file_b) {
  std::string text_a = slurp(file_a);
  std::string text_b = slurp(file_b);
  bool part_a = looks_like_partition(text_a);
  if (part_a != looks_like_partition(text_b))
    throw std::invalid_argument("element files are of different kinds");
  if (part_a)
    return order_on_partitions(pred, Partition::from_text(text_a),
                               Partition::from_text(text_b));
  return order_on_relations(pred, Relation::from_text(text_a),
                            Relation::from_text(text_b));
}

int cmd_hasse(const std::string& universe, int n, const std::string& dot_path,
              bool force) {
  UniverseKind kind = parse_kind(universe);
  if (n < 0 || (n > 3 && !force)) {
    std::cerr << "error: n=" << n << " exceeds the universe guard\n";
    return 2;
  }
  std::string dot;
  auto build = [&](const auto& u) {
    std::vector<PreorderMatrix> gens = {materialise(u, "mitsch"),
                                        materialise(u, "incl"),
                                        materialise(u, "rincl")};
    dot = to_dot(generate_sublattice(u, std::move(gens)));
  };
  if (kind == UniverseKind::relations)
    build(enumerate_relations(n, force));
  else
    build(enumerate_partitions(n, force));
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "error: cannot write '" << dot_path << "'\n";
      return 2;
    }
    out << dot;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural-order and inclusion computations on the monoids of "
               "binary relations and partition diagrams"};
  app.require_subcommand(1);

  std::string suite, universe = "relations", report_path, dot_path;
  std::string pred, file_a, file_b;
  int n = 2;
  uint64_t sample = 10000, seed = 0;
  bool force = false;

  auto* check = app.add_subcommand("check", "run a named verification suite");
  check->add_option("suite", suite, "suite name")->required();
  check->add_option("--universe", universe, "relations|partitions");
  check->add_option("--n", n, "ground-set size");
  check->add_option("--sample", sample, "sampled pairs/triples when not exhaustive");
  check->add_option("--seed", seed, "sampler seed");
  check->add_option("--report", report_path, "write report to file");
  check->add_flag("--force-large", force, "override universe guards");

  auto* order = app.add_subcommand("order", "evaluate a predicate on two elements");
  order->add_option("pred", pred, "predicate name")->required();
  order->add_option("a", file_a, "first element file")->required();
  order->add_option("b", file_b, "second element file")->required();

  auto* hasse = app.add_subcommand("hasse", "emit the preorder sublattice as DOT");
  hasse->add_option("--universe", universe, "relations|partitions");
  hasse->add_option("--n", n, "ground-set size");
  hasse->add_option("--dot", dot_path, "output path (default stdout)");
  hasse->add_flag("--force-large", force, "override universe guards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed())
      return cmd_check(suite, universe, n, sample, seed, report_path, force);
    if (order->parsed()) return cmd_order(pred, file_a, file_b);
    if (hasse->parsed()) return cmd_hasse(universe, n, dot_path, force);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
