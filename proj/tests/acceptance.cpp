// Acceptance harness: runs every verification criterion at its pinned
// scale and time budget and prints one pass/fail line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mitsch/lattice.hpp"
#include "mitsch/suites.hpp"

using namespace mitsch;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

bool suite_ok(const std::string& name, UniverseKind kind, int n,
              std::string& detail, uint64_t sample = 10000, uint64_t seed = 0,
              double budget_ms = 0) {
  CheckReport rep = run_suite(name, kind, n, sample, seed);
  if (!rep.passed()) {
    detail += name + "@" + to_string(kind) + " n=" + std::to_string(n) + ": " +
              rep.failures.front() + "; ";
    return false;
  }
  if (budget_ms > 0 && rep.wall_ms > budget_ms) {
    detail += name + " exceeded budget (" + std::to_string(rep.wall_ms) +
              " ms > " + std::to_string(budget_ms) + " ms); ";
    return false;
  }
  return true;
}

// 1. Equational criterion vs the quantified definition.
Outcome criterion_1() {
  std::string detail;
  bool ok = suite_ok("thm-equational-criterion", UniverseKind::relations, 2,
                     detail, 10000, 0, 1000);
  ok &= suite_ok("thm-equational-criterion", UniverseKind::relations, 3,
                 detail, 10000, 0, 30000);
  return {ok, detail};
}

// 2. The natural order is a partial order.
Outcome criterion_2() {
  std::string detail;
  bool ok =
      suite_ok("partial-order", UniverseKind::relations, 2, detail);
  ok &= suite_ok("partial-order", UniverseKind::partitions, 2, detail);
  ok &= suite_ok("partial-order", UniverseKind::partitions, 3, detail, 10000,
                 0, 300000);
  return {ok, detail};
}

// 3. Residuation: both equivalences and witness maximality over B_2^3.
Outcome criterion_3() {
  std::string detail;
  bool ok = suite_ok("residuation", UniverseKind::relations, 2, detail, 10000,
                     0, 5000);
  return {ok, detail};
}

// 4. Subsemigroup, F(alpha) and meet-witness propositions on B_2.
Outcome criterion_4() {
  std::string detail;
  bool ok = suite_ok("subsemigroup-ix", UniverseKind::relations, 2, detail);
  ok &= suite_ok("prop-fa", UniverseKind::relations, 2, detail);
  ok &= suite_ok("prop-meet-witness", UniverseKind::relations, 2, detail);
  return {ok, detail};
}

// 5. Composite preorders and joins on B_2; atoms and interval claims.
Outcome criterion_5() {
  std::string detail;
  bool ok = suite_ok("prop-incl-then-le", UniverseKind::relations, 2, detail);
  ok &= suite_ok("prop-rincl-then-le", UniverseKind::relations, 2, detail);
  ok &= suite_ok("join-closure", UniverseKind::relations, 2, detail);
  CheckReport atoms = run_suite("atoms", UniverseKind::relations, 2);
  ok &= atoms.passed();
  for (const auto& note : atoms.notes) detail += note + "; ";
  if (!atoms.passed()) detail += atoms.failures.front() + "; ";
  return {ok, detail};
}

// 6. Partition-monoid structure: associativity, compatibility, d/k laws,
// idempotents, star laws, and the composite criteria against the
// existential oracle.
Outcome criterion_6() {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n : {2, 3}) {
    ok &= suite_ok("assoc", UniverseKind::partitions, n, detail);
    ok &= suite_ok("lemma-compat", UniverseKind::partitions, n, detail);
    ok &= suite_ok("lemma-dk", UniverseKind::partitions, n, detail);
    ok &= suite_ok("cor-idempotents", UniverseKind::partitions, n, detail);
    ok &= suite_ok("star-laws", UniverseKind::partitions, n, detail);
  }
  if (ms_since(t0) > 120000) {
    ok = false;
    detail += "structure sweeps exceeded 2 min; ";
  }
  ok &= suite_ok("prop-pda", UniverseKind::partitions, 2, detail);
  ok &= suite_ok("prop-pka", UniverseKind::partitions, 2, detail);
  ok &= suite_ok("prop-pda", UniverseKind::partitions, 3, detail, 1000, 0);
  ok &= suite_ok("prop-pka", UniverseKind::partitions, 3, detail, 1000, 0);
  return {ok, detail};
}

// 7. Canonical subsemigroups of P_2.
Outcome criterion_7() {
  std::string detail;
  bool ok = suite_ok("subsemigroup-ix", UniverseKind::partitions, 2, detail);
  return {ok, detail};
}

// 8. Lattice reconstruction on B_2 and P_2.
template <typename Universe>
bool check_lattice(const Universe& u, std::string& detail) {
  std::vector<PreorderMatrix> gens = {materialise(u, "mitsch"),
                                      materialise(u, "incl"),
                                      materialise(u, "rincl")};
  Sublattice lat = generate_sublattice(u, gens);
  bool ok = true;
  for (const auto& name : named_predicates()) {
    bool found = false;
    for (const auto& node : lat.nodes) found |= node.label == name;
    if (!found) {
      ok = false;
      detail += to_string(u.kind()) + ": missing node " + name + "; ";
    }
  }
  auto member = [&lat](const PreorderMatrix& p) {
    for (const auto& node : lat.nodes)
      if (node.matrix.same_bits(p)) return true;
    return false;
  };
  for (const auto& a : lat.nodes)
    for (const auto& b : lat.nodes)
      if (!member(intersect_preorders(a.matrix, b.matrix)) ||
          !member(closure_join(a.matrix, b.matrix))) {
        ok = false;
        detail += to_string(u.kind()) + ": not closed; ";
      }
  // Exactly the six non-composite named preorders carry the order flag;
  // unnamed coincidences, if any, are reported rather than assumed away.
  for (const auto& node : lat.nodes) {
    bool named_order =
        node.label == "eq" || node.label == "mitsch" || node.label == "incl" ||
        node.label == "rincl" || node.label == "mitsch_and_incl" ||
        node.label == "mitsch_and_rincl";
    bool named_composite = node.label == "incl_then_mitsch" ||
                           node.label == "rincl_then_mitsch";
    if (named_order && !node.is_order) {
      ok = false;
      detail += to_string(u.kind()) + ": " + node.label + " not an order; ";
    }
    if (named_composite && node.is_order) {
      ok = false;
      detail += to_string(u.kind()) + ": " + node.label +
                " unexpectedly antisymmetric; ";
    }
    if (!named_order && !named_composite)
      detail += to_string(u.kind()) + ": extra node " + node.label +
                (node.is_order ? " (order); " : " (preorder); ");
  }
  if (to_dot(lat) != to_dot(generate_sublattice(u, gens))) {
    ok = false;
    detail += to_string(u.kind()) + ": DOT not deterministic; ";
  }
  return ok;
}

Outcome criterion_8() {
  std::string detail;
  bool ok = check_lattice(enumerate_relations(2), detail);
  ok &= check_lattice(enumerate_partitions(2), detail);
  return {ok, detail};
}

// 9. The equational test is polynomial: single pairs at n = 64 in
// under 10 ms.
Outcome criterion_9() {
  std::mt19937_64 rng(42);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Relation a(64), b(64);
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        if (rng() & 1) a.set(i, j, true);
        if (rng() & 1) b.set(i, j, true);
      }
    auto t0 = std::chrono::steady_clock::now();
    volatile bool r = mitsch_le(a, b);
    (void)r;
    worst = std::max(worst, ms_since(t0));
  }
  std::string detail = "worst of 10 pairs: " + std::to_string(worst) + " ms";
  return {worst < 10.0, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"1 equational-criterion-vs-definition", criterion_1},
      {"2 natural-order-is-partial-order", criterion_2},
      {"3 residuation", criterion_3},
      {"4 inclusion-connexions", criterion_4},
      {"5 relation-preorder-lattice", criterion_5},
      {"6 partition-structure-and-composites", criterion_6},
      {"7 partition-canonical-subsemigroups", criterion_7},
      {"8 sublattice-reconstruction", criterion_8},
      {"9 performance-at-n-64", criterion_9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out = c.run();
    double ms = ms_since(t0);
    std::printf("%s criterion %s (%.0f ms)%s%s\n", out.ok ? "PASS" : "FAIL",
                c.label, ms, out.detail.empty() ? "" : " - ",
                out.detail.c_str());
    failures += !out.ok;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
