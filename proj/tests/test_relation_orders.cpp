#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mitsch/relation_orders.hpp"

using namespace mitsch;
using mitsch_tests::rel;

TEST_CASE("mitsch_le basics") {
  const auto& u = all_relations(2);
  Relation omega = Relation::universal(2);
  for (const auto& a : u) {
    CHECK(mitsch_le(a, a));
    CHECK(mitsch_le(Relation::empty(2), a));
    // b w b is below b for every b.
    CHECK(mitsch_le(compose(compose(a, omega), a), a));
  }
  // The two distinct permutations of {1,2} are incomparable.
  CHECK_FALSE(mitsch_le(Relation::identity(2), rel("01/10")));
  CHECK_FALSE(mitsch_le(rel("01/10"), Relation::identity(2)));
  CHECK_THROWS_AS(mitsch_le(Relation::empty(2), Relation::empty(3)),
                  std::invalid_argument);
}

TEST_CASE("oracle agrees with the equational criterion on B_2") {
  const auto& u = all_relations(2);
  CHECK(mitsch_le_oracle(Relation::universal(2), Relation::identity(2)));
  for (const auto& a : u)
    for (const auto& b : u)
      CHECK(mitsch_le(a, b) == mitsch_le_oracle(a, b));
}

TEST_CASE("oracle agrees on sampled B_3 pairs") {
  const auto& u = all_relations(3);
  std::mt19937_64 rng(0);
  for (int s = 0; s < 2000; ++s) {
    const Relation& a = u[rng() % u.size()];
    const Relation& b = u[rng() % u.size()];
    REQUIRE(mitsch_le(a, b) == mitsch_le_oracle(a, b));
  }
  CHECK_THROWS_AS(mitsch_le_oracle(Relation::empty(4), Relation::empty(4)),
                  std::invalid_argument);
}

TEST_CASE("conjunctions with inclusion") {
  const auto& u = all_relations(2);
  for (const auto& a : u) {
    CHECK(meet_with_inclusion(a, a));
    CHECK(meet_with_reverse_inclusion(a, a));
  }
  // Inside a partial injection implies below it in both senses of the
  // conjunction with inclusion.
  CHECK(meet_with_inclusion(rel("10/00"), Relation::identity(2)));
  CHECK_FALSE(meet_with_inclusion(Relation::universal(2), Relation::identity(2)));
  CHECK(meet_with_reverse_inclusion(Relation::universal(2), Relation::identity(2)));
  CHECK_FALSE(meet_with_reverse_inclusion(Relation::empty(2), Relation::identity(2)));
}

TEST_CASE("meet witnesses") {
  const auto& u = all_relations(2);
  Relation id = Relation::identity(2);
  auto w = meet_rev_witnesses(Relation::universal(2), id);
  REQUIRE(w.has_value());
  CHECK(w->epsilon == Relation::universal(2));
  CHECK(w->phi == Relation::universal(2));
  CHECK_FALSE(meet_rev_witnesses(Relation::empty(2), id).has_value());
  for (const auto& a : u) {
    auto r = meet_rev_witnesses(a, a);
    REQUIRE(r.has_value());
    CHECK(compose(r->epsilon, r->epsilon) == r->epsilon);
    CHECK(is_subset(id, r->epsilon));
    CHECK(compose(a, r->epsilon) == a);
  }
  // Presence of witnesses tracks the conjunction order exactly.
  for (const auto& a : u)
    for (const auto& b : u)
      CHECK(meet_rev_witnesses(a, b).has_value() ==
            meet_with_reverse_inclusion(a, b));
}

TEST_CASE("F(alpha) membership") {
  Relation omega = Relation::universal(2);
  CHECK(in_F(omega, Relation::identity(2)));
  CHECK(in_F(omega, omega));
  CHECK_FALSE(in_F(omega, rel("10/00")));
  CHECK_THROWS_AS(in_F(rel("01/00"), omega), std::invalid_argument);
}

TEST_CASE("composite preorder membership") {
  const auto& u = all_relations(2);
  Relation id = Relation::identity(2);
  Relation omega = Relation::universal(2);
  for (const auto& a : u) {
    CHECK(comp_subset_then_le(a, omega));
    CHECK(comp_supset_then_le(a, Relation::empty(2)));
  }
  CHECK(comp_subset_then_le(id, rel("01/10")));
  CHECK(comp_subset_then_le(rel("01/10"), id));
  CHECK_FALSE(comp_subset_then_le(omega, Relation::empty(2)));
  CHECK(comp_supset_then_le(id, omega));
  CHECK(comp_supset_then_le(omega, id));
  // Existential characterisation of the inclusion composite.
  for (const auto& a : u)
    for (const auto& b : u) {
      bool search = false;
      for (const auto& g : u)
        if (is_subset(a, g) && mitsch_le(g, b)) {
          search = true;
          break;
        }
      CHECK(comp_subset_then_le(a, b) == search);
    }
}

TEST_CASE("proper containments at n = 2") {
  Relation id = Relation::identity(2);
  Relation swap = rel("01/10");
  Relation omega = Relation::universal(2);
  // pi (incl;le) rho through omega, but no gamma with pi <= gamma inside rho.
  CHECK(comp_subset_then_le(id, swap));
  bool le_then_incl = false;
  for (const auto& g : all_relations(2))
    if (mitsch_le(id, g) && is_subset(g, swap)) le_then_incl = true;
  CHECK_FALSE(le_then_incl);
  // iota <= alpha containing omega forces alpha = iota = omega.
  bool le_then_rincl = false;
  for (const auto& g : all_relations(2))
    if (mitsch_le(id, g) && is_subset(omega, g)) le_then_rincl = true;
  CHECK_FALSE(le_then_rincl);
}
