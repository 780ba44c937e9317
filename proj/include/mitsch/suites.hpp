// Named verification sweeps over B_n and P_n.  Each suite checks one of
// the study's claims exhaustively at desk scale (n <= 2 for relations,
// n <= 3 for partitions) or by seeded sampling (n = 3 relations, the
// quadratic partition criteria at n = 3), and reports sorted failure
// witnesses.  Report rendering is deterministic for fixed inputs.

#ifndef MITSCH_SUITES_HPP_
#define MITSCH_SUITES_HPP_

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mitsch/lattice.hpp"
#include "mitsch/partition_orders.hpp"
#include "mitsch/relation_orders.hpp"
#include "mitsch/universe.hpp"

namespace mitsch {

struct CheckReport {
  std::string suite;
  UniverseKind kind = UniverseKind::relations;
  int n = 0;
  uint64_t checked = 0;   // pairs/triples/elements examined
  uint64_t sampled = 0;   // of which were drawn by the seeded sampler
  uint64_t seed = 0;
  std::vector<std::string> notes;     // reported outcomes, not failures
  std::vector<std::string> failures;  // witness lines, sorted
  double wall_ms = 0;

  bool passed() const { return failures.empty(); }

  void fail(const std::string& witness) {
    if (failures.size() < 1000) failures.push_back(witness);
  }

  // Wall time is deliberately omitted: identical invocations must give
  // byte-identical reports.
  std::string to_text() const {
    std::ostringstream os;
    os << "suite: " << suite << '\n';
    os << "universe: " << to_string(kind) << '\n';
    os << "n: " << n << '\n';
    os << "checked: " << checked << '\n';
    os << "sampled: " << sampled << '\n';
    os << "seed: " << seed << '\n';
    for (const auto& note : notes) os << "note: " << note << '\n';
    for (const auto& w : failures) os << "witness: " << w << '\n';
    os << "failures: " << failures.size() << '\n';
    os << "passed: " << (passed() ? "true" : "false") << '\n';
    return os.str();
  }
};

inline std::string inline_text(const Relation& a) {
  if (a.n() == 0) return "0x0";
  std::string s;
  for (int i = 0; i < a.n(); ++i) {
    if (i) s += '/';
    for (int j = 0; j < a.n(); ++j) s += a.get(i, j) ? '1' : '0';
  }
  return s;
}

namespace detail {

struct SweepCtx {
  UniverseKind kind;
  int n;
  uint64_t sample;
  uint64_t seed;
  bool force;
  std::mt19937_64 rng;

  SweepCtx(UniverseKind k, int n_, uint64_t sample_, uint64_t seed_, bool f)
      : kind(k), n(n_), sample(sample_), seed(seed_), force(f), rng(seed_) {}

  size_t draw(size_t m) { return static_cast<size_t>(rng() % m); }
};

// Exhaustive pairs when the universe is small, else `sample` seeded draws.
template <typename F>
void for_pairs(SweepCtx& ctx, CheckReport& rep, size_t m, bool exhaustive,
               F&& f) {
  if (exhaustive) {
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        f(i, j);
        ++rep.checked;
      }
  } else {
    for (uint64_t s = 0; s < ctx.sample; ++s) {
      f(ctx.draw(m), ctx.draw(m));
      ++rep.checked;
      ++rep.sampled;
    }
  }
}

template <typename F>
void for_triples(SweepCtx& ctx, CheckReport& rep, size_t m, bool exhaustive,
                 F&& f) {
  if (exhaustive) {
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        for (size_t k = 0; k < m; ++k) {
          f(i, j, k);
          ++rep.checked;
        }
  } else {
    for (uint64_t s = 0; s < ctx.sample; ++s) {
      f(ctx.draw(m), ctx.draw(m), ctx.draw(m));
      ++rep.checked;
      ++rep.sampled;
    }
  }
}

inline void require_kind(const SweepCtx& ctx, UniverseKind kind,
                         const char* suite) {
  if (ctx.kind != kind)
    throw std::invalid_argument(std::string(suite) + ": not defined for " +
                                to_string(ctx.kind));
}

inline std::string pair_witness(const Relation& a, const Relation& b,
                                const std::string& what) {
  return "a=" + inline_text(a) + " b=" + inline_text(b) + " : " + what;
}

inline std::string pair_witness(const Partition& a, const Partition& b,
                                const std::string& what) {
  return "a=[" + a.to_text() + "] b=[" + b.to_text() + "] : " + what;
}

// ---- relations -----------------------------------------------------------

inline void suite_equational_criterion(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "thm-equational-criterion");
  const auto& u = all_relations(ctx.n, ctx.force);
  for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
    bool fast = mitsch_le(u[i], u[j]);
    bool def = mitsch_le_oracle(u[i], u[j], ctx.force);
    if (fast != def)
      rep.fail(pair_witness(u[i], u[j],
                            "equational=" + std::to_string(fast) +
                                " definitional=" + std::to_string(def)));
  });
}

inline void suite_partial_order(CheckReport& rep, SweepCtx& ctx) {
  if (ctx.kind == UniverseKind::relations) {
    const auto& u = all_relations(ctx.n, ctx.force);
    for (const auto& a : u) {
      ++rep.checked;
      if (!mitsch_le(a, a)) rep.fail(pair_witness(a, a, "not reflexive"));
    }
    for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
      if (i != j && mitsch_le(u[i], u[j]) && mitsch_le(u[j], u[i]))
        rep.fail(pair_witness(u[i], u[j], "antisymmetry violated"));
    });
    for_triples(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j, size_t k) {
      if (mitsch_le(u[i], u[j]) && mitsch_le(u[j], u[k]) &&
          !mitsch_le(u[i], u[k]))
        rep.fail(pair_witness(u[i], u[k], "transitivity violated via " +
                                              inline_text(u[j])));
    });
  } else {
    auto u = enumerate_partitions(ctx.n, ctx.force);
    int m = u.size();
    for (int i = 0; i < m; ++i) {
      ++rep.checked;
      if (!u.natural_le(i, i))
        rep.fail(pair_witness(u[i], u[i], "not reflexive"));
    }
    // Antisymmetry over all pairs (Cayley-table scans keep this cheap
    // even at n = 3); transitivity exhaustively only at n <= 2.
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        ++rep.checked;
        if (u.natural_le(i, j) && u.natural_le(j, i))
          rep.fail(pair_witness(u[i], u[j], "antisymmetry violated"));
      }
    for_triples(ctx, rep, m, ctx.n <= 2, [&](size_t i, size_t j, size_t k) {
      if (u.natural_le((int)i, (int)j) && u.natural_le((int)j, (int)k) &&
          !u.natural_le((int)i, (int)k))
        rep.fail(pair_witness(u[i], u[k],
                              "transitivity violated via [" + u[j].to_text() + "]"));
    });
  }
}

inline void suite_residuation(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "residuation");
  const auto& u = all_relations(ctx.n, ctx.force);
  for_triples(ctx, rep, u.size(), ctx.n <= 2, [&](size_t ia, size_t ib, size_t ix) {
    const Relation &a = u[ia], &b = u[ib], &x = u[ix];
    Relation r = max_right_solution(b, a);
    bool lhs = is_subset(compose(b, x), a);
    bool mid = is_subset(x, r);
    bool rhs = is_subset(b, complement(compose(complement(a), converse(x))));
    if (lhs != mid || mid != rhs)
      rep.fail(pair_witness(a, b, "residuation equivalences broken at x=" +
                                      inline_text(x)));
    // Witness maximality: any exact solution sits inside the residual.
    if (compose(b, x) == a && !is_subset(x, r))
      rep.fail(pair_witness(a, b, "residual not maximal at x=" +
                                      inline_text(x)));
    if (divides_right(b, a) && compose(b, r) != a)
      rep.fail(pair_witness(a, b, "residual fails to witness divisibility"));
    // Left residual is the mirror of the right one.
    if (max_left_solution(b, a) !=
        converse(max_right_solution(converse(b), converse(a))))
      rep.fail(pair_witness(a, b, "left/right residual duality broken"));
  });
}

inline void suite_subsemigroup_canonical(CheckReport& rep, SweepCtx& ctx);

// For relations: the partial injections form a regular subsemigroup where
// the natural order is inclusion.  For partitions: dispatches to the
// block-bijection / partial-injection-diagram checks.
inline void suite_subsemigroup_ix(CheckReport& rep, SweepCtx& ctx) {
  if (ctx.kind == UniverseKind::partitions) {
    suite_subsemigroup_canonical(rep, ctx);
    return;
  }
  const auto& u = all_relations(ctx.n, ctx.force);
  std::vector<Relation> inj;
  for (const auto& r : u)
    if (is_partial_injection(r)) inj.push_back(r);
  // Natural order computed inside the subsemigroup (quantifiers over
  // partial injections only) must agree with the ambient test, and both
  // must agree with inclusion.
  auto le_in_sub = [&inj](const Relation& a, const Relation& b) {
    if (a == b) return true;
    bool fx = false;
    for (const auto& x : inj)
      if (compose(a, x) == a && compose(b, x) == a) {
        fx = true;
        break;
      }
    if (!fx) return false;
    for (const auto& y : inj)
      if (compose(y, b) == a) return true;
    return false;
  };
  for (const auto& a : inj)
    for (const auto& b : inj) {
      ++rep.checked;
      bool ambient = mitsch_le(a, b);
      if (le_in_sub(a, b) != ambient)
        rep.fail(pair_witness(a, b, "subsemigroup order disagrees with ambient"));
      if (ambient != is_subset(a, b))
        rep.fail(pair_witness(a, b, "order vs inclusion disagree on I_n"));
    }
  // alpha inside a partial injection is below it in the natural order.
  for (const auto& a : u)
    for (const auto& b : inj) {
      ++rep.checked;
      if (is_subset(a, b) && !mitsch_le(a, b))
        rep.fail(pair_witness(a, b, "inclusion into I_n element not below"));
    }
}

inline void suite_prop_fa(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "prop-fa");
  const auto& u = all_relations(ctx.n, ctx.force);
  for (const auto& alpha : u) {
    if (!is_preorder(alpha)) continue;
    for (const auto& beta : u) {
      ++rep.checked;
      if (!in_F(alpha, beta)) continue;
      if (!mitsch_le(alpha, beta))
        rep.fail(pair_witness(alpha, beta, "alpha not below member of F(alpha)"));
      if (mitsch_le(alpha, beta) != is_subset(beta, alpha))
        rep.fail(pair_witness(alpha, beta, "F(alpha) criterion broken"));
    }
  }
}

inline void suite_meet_witness(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "prop-meet-witness");
  const auto& u = all_relations(ctx.n, ctx.force);
  Relation id = Relation::identity(ctx.n);
  for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
    const Relation &a = u[i], &b = u[j];
    bool in_order = meet_with_reverse_inclusion(a, b);
    try {
      auto w = meet_rev_witnesses(a, b);
      if (w.has_value() != in_order)
        rep.fail(pair_witness(a, b, "witness presence disagrees with order"));
    } catch (const std::logic_error& e) {
      rep.fail(pair_witness(a, b, e.what()));
    }
  });
  // Converse direction: any pair of idempotent witnesses puts (a, b) in
  // the conjunction with reverse inclusion.
  for (const auto& b : u)
    for (const auto& eps : u) {
      if (compose(eps, eps) != eps || !is_subset(id, eps)) continue;
      for (const auto& phi : u) {
        if (compose(phi, phi) != phi) continue;
        ++rep.checked;
        Relation a = compose(b, eps);
        if (compose(phi, b) != a) continue;
        if (!meet_with_reverse_inclusion(a, b))
          rep.fail(pair_witness(a, b, "witnessed pair not in meet with rincl"));
      }
    }
}

inline void suite_incl_then_le(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "prop-incl-then-le");
  const auto& u = all_relations(ctx.n, ctx.force);
  for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
    const Relation &a = u[i], &b = u[j];
    bool crit = comp_subset_then_le(a, b);
    bool search = false;
    for (const auto& g : u)
      if (is_subset(a, g) && mitsch_le(g, b)) {
        search = true;
        break;
      }
    if (crit != search)
      rep.fail(pair_witness(a, b, "a w a criterion disagrees with gamma search"));
  });
}

inline void suite_rincl_then_le(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "prop-rincl-then-le");
  const auto& u = all_relations(ctx.n, ctx.force);
  Relation nothing = Relation::empty(ctx.n);
  for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
    const Relation &a = u[i], &b = u[j];
    if (!comp_supset_then_le(a, b))
      rep.fail(pair_witness(a, b, "composite not universal"));
    // The witness chain a contains empty below b must actually hold.
    if (!is_subset(nothing, a) || !mitsch_le(nothing, b))
      rep.fail(pair_witness(a, b, "empty-relation witness chain broken"));
  });
}

inline void suite_atoms(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::relations, "atoms");
  const auto& u = all_relations(ctx.n, ctx.force);
  Relation nothing = Relation::empty(ctx.n);
  // The empty relation is the least element; atoms cover it.
  std::vector<bool> is_atom(u.size(), false);
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == nothing) continue;
    bool atom = true;
    for (const auto& g : u)
      if (g != nothing && g != u[i] && mitsch_le(g, u[i])) {
        atom = false;
        break;
      }
    is_atom[i] = atom;
  }
  size_t atom_count = 0;
  for (bool a : is_atom) atom_count += a;
  rep.notes.push_back("atoms: " + std::to_string(atom_count));
  // Every single-pair relation (inclusion atom) is an atom of the
  // natural order.
  for (size_t i = 0; i < u.size(); ++i) {
    ++rep.checked;
    if (u[i].pair_count() == 1 && !is_atom[i])
      rep.fail("a=" + inline_text(u[i]) + " : inclusion atom is not an atom");
  }
  // Every non-empty relation sits in an inclusion interval between two
  // atoms; the outcome is reported either way.
  bool interval_holds = true;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == nothing) continue;
    ++rep.checked;
    bool below = false, above = false;
    for (size_t s = 0; s < u.size(); ++s) {
      if (!is_atom[s]) continue;
      below = below || is_subset(u[s], u[i]);
      above = above || is_subset(u[i], u[s]);
    }
    if (!(below && above)) {
      interval_holds = false;
      rep.fail("a=" + inline_text(u[i]) + " : no atom interval around it");
    }
  }
  rep.notes.push_back(std::string("interval-claim: ") +
                      (interval_holds ? "holds" : "fails"));
}

// ---- partitions ----------------------------------------------------------

inline void suite_assoc(CheckReport& rep, SweepCtx& ctx) {
  if (ctx.kind == UniverseKind::relations) {
    const auto& u = all_relations(ctx.n, ctx.force);
    for_triples(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j, size_t k) {
      if (compose(compose(u[i], u[j]), u[k]) !=
          compose(u[i], compose(u[j], u[k])))
        rep.fail(pair_witness(u[i], u[j], "associativity broken with c=" +
                                              inline_text(u[k])));
    });
  } else {
    auto u = enumerate_partitions(ctx.n, ctx.force);
    int m = u.size();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          ++rep.checked;
          if (u.product(u.product(i, j), k) != u.product(i, u.product(j, k)))
            rep.fail(pair_witness(u[i], u[j], "associativity broken with c=[" +
                                                  u[k].to_text() + "]"));
        }
  }
}

inline void suite_lemma_compat(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::partitions, "lemma-compat");
  auto u = enumerate_partitions(ctx.n, ctx.force);
  int m = u.size();
  PreorderMatrix incl = materialise(u, "incl");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!incl.get(a, b)) continue;
      for (int c = 0; c < m; ++c) {
        ++rep.checked;
        if (!incl.get(u.product(a, c), u.product(b, c)) ||
            !incl.get(u.product(c, a), u.product(c, b)))
          rep.fail(pair_witness(u[a], u[b], "product not compatible with c=[" +
                                                u[c].to_text() + "]"));
      }
    }
}

inline void suite_lemma_dk(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::partitions, "lemma-dk");
  const auto& u = all_partitions(ctx.n, ctx.force);
  Partition d = Partition::trivial_d(ctx.n);
  Partition k = Partition::universal_k(ctx.n);
  for (const auto& a : u) {
    ++rep.checked;
    if (compose(compose(d, a), d) != d)
      rep.fail("a=[" + a.to_text() + "] : d a d != d");
    if (a.has_transversal()) {
      if (compose(compose(k, a), k) != k)
        rep.fail("a=[" + a.to_text() + "] : k a k != k");
    } else {
      if (compose(compose(a, k), a) != a)
        rep.fail("a=[" + a.to_text() + "] : a k a != a");
    }
  }
}

inline void suite_cor_idempotents(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::partitions, "cor-idempotents");
  const auto& u = all_partitions(ctx.n, ctx.force);
  Partition d = Partition::trivial_d(ctx.n);
  Partition k = Partition::universal_k(ctx.n);
  for (const auto& a : u) {
    ++rep.checked;
    for (const Partition& e :
         {compose(a, d), compose(d, a), compose(a, k), compose(k, a)})
      if (compose(e, e) != e)
        rep.fail("a=[" + a.to_text() + "] : product with d/k not idempotent");
  }
}

inline void suite_star_laws(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::partitions, "star-laws");
  const auto& u = all_partitions(ctx.n, ctx.force);
  for (const auto& a : u) {
    ++rep.checked;
    if (star(star(a)) != a)
      rep.fail("a=[" + a.to_text() + "] : star not involutive");
    if (compose(compose(a, star(a)), a) != a)
      rep.fail("a=[" + a.to_text() + "] : a a* a != a");
  }
  for_pairs(ctx, rep, u.size(), ctx.n <= 3, [&](size_t i, size_t j) {
    if (star(compose(u[i], u[j])) != compose(star(u[j]), star(u[i])))
      rep.fail(pair_witness(u[i], u[j], "star antihomomorphism broken"));
  });
}

inline void suite_oracle_fast_agreement(CheckReport& rep, SweepCtx& ctx) {
  require_kind(ctx, UniverseKind::partitions, "oracle-fast-agreement");
  auto u = enumerate_partitions(ctx.n, ctx.force);
  const auto& idem = u.idempotents();
  auto fast = [&](int a, int b) {
    if (a == b) return true;
    bool fe = false;
    for (int e : idem)
      if (u.product(e, b) == a) {
        fe = true;
        break;
      }
    if (!fe) return false;
    for (int f : idem)
      if (u.product(b, f) == a) return true;
    return false;
  };
  for_pairs(ctx, rep, u.size(), ctx.n <= 2, [&](size_t i, size_t j) {
    if (fast((int)i, (int)j) != u.natural_le((int)i, (int)j))
      rep.fail(pair_witness(u[i], u[j],
                            "idempotent-witness test disagrees with oracle"));
  });
}

inline void suite_prop_pda_pka(CheckReport& rep, SweepCtx& ctx, bool pka) {
  require_kind(ctx, UniverseKind::partitions,
               pka ? "prop-pka" : "prop-pda");
  auto u = enumerate_partitions(ctx.n, ctx.force);
  int m = u.size();
  PreorderMatrix incl = materialise(u, "incl");
  PreorderMatrix le = materialise(u, "mitsch");
  for_pairs(ctx, rep, m, ctx.n <= 2, [&](size_t ia, size_t ib) {
    int a = (int)ia, b = (int)ib;
    bool crit = pka ? comp_subset_then_le(u[a], u[b])
                    : comp_supset_then_le(u[a], u[b]);
    bool search = false;
    for (int c = 0; c < m && !search; ++c)
      search = (pka ? incl.get(a, c) : incl.get(c, a)) && le.get(c, b);
    if (crit != search)
      rep.fail(pair_witness(u[a], u[b], "d/k criterion disagrees with c search"));
  });
}

template <typename Universe>
void suite_join_closure_impl(CheckReport& rep, const Universe& u) {
  bool relations = u.kind() == UniverseKind::relations;
  std::map<std::string, PreorderMatrix> named;
  for (const auto& name : named_predicates()) named[name] = materialise(u, name);
  auto expect = [&rep, &u](bool ok, const std::string& what) {
    ++rep.checked;
    if (!ok) rep.fail(what + " (universe " + to_string(u.kind()) + ")");
  };

  for (const auto& [name, mat] : named)
    expect(is_preorder_matrix(mat), name + " is not a preorder");
  for (const auto& name : {"eq", "mitsch", "incl", "rincl", "mitsch_and_incl",
                           "mitsch_and_rincl"})
    expect(is_order_matrix(named[name]), std::string(name) + " is not an order");

  // Composite matrices equal their closed-form criteria.
  expect(compose_preorders(named["incl"], named["mitsch"])
             .same_bits(named["incl_then_mitsch"]),
         "incl;mitsch differs from its criterion matrix");
  expect(compose_preorders(named["rincl"], named["mitsch"])
             .same_bits(named["rincl_then_mitsch"]),
         "rincl;mitsch differs from its criterion matrix");

  // The composites are the joins in the lattice of preorders.
  expect(closure_join(named["incl"], named["mitsch"])
             .same_bits(named["incl_then_mitsch"]),
         "join of incl and mitsch is not the composite");
  expect(closure_join(named["rincl"], named["mitsch"])
             .same_bits(named["rincl_then_mitsch"]),
         "join of rincl and mitsch is not the composite");

  // Reverse composites are contained in the forward ones, properly so
  // at n >= 2.
  PreorderMatrix rev_incl = compose_preorders(named["mitsch"], named["incl"]);
  PreorderMatrix rev_rincl = compose_preorders(named["mitsch"], named["rincl"]);
  expect(rev_incl.contained_in(named["incl_then_mitsch"]),
         "mitsch;incl not inside incl;mitsch");
  expect(rev_rincl.contained_in(named["rincl_then_mitsch"]),
         "mitsch;rincl not inside rincl;mitsch");
  if (u.n() >= 2) {
    auto w1 = find_separating_witness(rev_incl, named["incl_then_mitsch"]);
    auto w2 = find_separating_witness(rev_rincl, named["rincl_then_mitsch"]);
    expect(w1.has_value(), "containment mitsch;incl < incl;mitsch not proper");
    expect(w2.has_value(), "containment mitsch;rincl < rincl;mitsch not proper");
    if constexpr (std::is_same_v<std::decay_t<decltype(u[0])>, Relation>) {
      // A pair of distinct permutations separates the inclusion composite
      // from its reverse.
      bool separated = false;
      for (int i = 0; i < u.size() && !separated; ++i)
        for (int j = 0; j < u.size() && !separated; ++j)
          if (i != j && is_permutation(u[i]) && is_permutation(u[j]))
            separated = named["incl_then_mitsch"].get(i, j) &&
                        !rev_incl.get(i, j);
      expect(separated,
             "no distinct-permutation pair separates the composites");
    }
  }
  if (relations)
    expect(named["rincl_then_mitsch"].same_bits(
               PreorderMatrix::all_ones(u.size())),
           "rincl;mitsch is not universal on relations");

  // The two conjunction orders meet in equality, and are non-trivial.
  expect(intersect_preorders(named["mitsch_and_incl"], named["mitsch_and_rincl"])
             .same_bits(named["eq"]),
         "conjunction of the two meet orders is not equality");
  if (u.n() >= 1) {
    expect(!named["mitsch_and_incl"].same_bits(named["eq"]),
           "mitsch_and_incl is trivial");
    expect(!named["mitsch_and_rincl"].same_bits(named["eq"]),
           "mitsch_and_rincl is trivial");
  }
}

inline void suite_join_closure(CheckReport& rep, SweepCtx& ctx) {
  if (ctx.kind == UniverseKind::relations)
    suite_join_closure_impl(rep, enumerate_relations(ctx.n, ctx.force));
  else
    suite_join_closure_impl(rep, enumerate_partitions(ctx.n, ctx.force));
}

inline void suite_subsemigroup_canonical(CheckReport& rep, SweepCtx& ctx) {
  auto u = enumerate_partitions(ctx.n, ctx.force);
  int m = u.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (u[i].is_block_bijection() && u[j].is_block_bijection()) {
        ++rep.checked;
        if (u.natural_le(i, j) != refinement_le(u[j], u[i]))
          rep.fail(pair_witness(u[i], u[j],
                                "block bijections: order vs reverse refinement"));
      }
      if (u[i].is_partial_injection_diagram() &&
          u[j].is_partial_injection_diagram()) {
        ++rep.checked;
        if (u.natural_le(i, j) != refinement_le(u[i], u[j]))
          rep.fail(pair_witness(u[i], u[j],
                                "partial injections: order vs refinement"));
      }
    }
}

}  // namespace detail

using SuiteFn =
    std::function<void(CheckReport&, detail::SweepCtx&)>;

inline const std::map<std::string, SuiteFn>& suite_registry() {
  using detail::SweepCtx;
  static const std::map<std::string, SuiteFn> reg = {
      {"thm-equational-criterion", detail::suite_equational_criterion},
      {"partial-order", detail::suite_partial_order},
      {"residuation", detail::suite_residuation},
      {"subsemigroup-ix", detail::suite_subsemigroup_ix},
      {"prop-fa", detail::suite_prop_fa},
      {"prop-meet-witness", detail::suite_meet_witness},
      {"prop-incl-then-le", detail::suite_incl_then_le},
      {"prop-rincl-then-le", detail::suite_rincl_then_le},
      {"atoms", detail::suite_atoms},
      {"assoc", detail::suite_assoc},
      {"lemma-compat", detail::suite_lemma_compat},
      {"lemma-dk", detail::suite_lemma_dk},
      {"cor-idempotents", detail::suite_cor_idempotents},
      {"star-laws", detail::suite_star_laws},
      {"oracle-fast-agreement", detail::suite_oracle_fast_agreement},
      {"prop-pda",
       [](CheckReport& r, detail::SweepCtx& c) {
         detail::suite_prop_pda_pka(r, c, false);
       }},
      {"prop-pka",
       [](CheckReport& r, detail::SweepCtx& c) {
         detail::suite_prop_pda_pka(r, c, true);
       }},
      {"join-closure", detail::suite_join_closure},
  };
  return reg;
}

inline CheckReport run_suite(const std::string& name, UniverseKind kind, int n,
                             uint64_t sample = 10000, uint64_t seed = 0,
                             bool force = false) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  CheckReport rep;
  rep.suite = name;
  rep.kind = kind;
  rep.n = n;
  rep.seed = seed;
  detail::SweepCtx ctx(kind, n, sample, seed, force);
  auto start = std::chrono::steady_clock::now();
  it->second(rep, ctx);
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

}  // namespace mitsch

#endif  // MITSCH_SUITES_HPP_
