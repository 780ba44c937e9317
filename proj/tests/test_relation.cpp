#include <doctest.h>

#include "helpers.hpp"
#include "mitsch/relation.hpp"

using namespace mitsch;
using mitsch_tests::rel;

TEST_CASE("constants") {
  CHECK(Relation::identity(2) == rel("10/01"));
  CHECK(Relation::universal(2) == rel("11/11"));
  CHECK(Relation::empty(2) == rel("00/00"));
  // Degenerate ground set: all three constants coincide.
  CHECK(Relation::empty(0) == Relation::identity(0));
  CHECK(Relation::universal(0) == Relation::identity(0));
  CHECK(constant(RelationKind::identity, 2) == Relation::identity(2));
  CHECK(constant(RelationKind::universal, 2) == Relation::universal(2));
  CHECK(constant(RelationKind::empty, 0) == Relation::empty(0));
}

TEST_CASE("compose") {
  CHECK(compose(rel("01/00"), rel("00/10")) == rel("10/00"));
  CHECK(compose(Relation::universal(2), Relation::universal(2)) ==
        Relation::universal(2));
  for (const auto& a : all_relations(2)) {
    CHECK(compose(Relation::identity(2), a) == a);
    CHECK(compose(a, Relation::identity(2)) == a);
  }
  CHECK_THROWS_AS(compose(Relation::identity(2), Relation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("compose is associative on B_2") {
  const auto& u = all_relations(2);
  for (const auto& a : u)
    for (const auto& b : u)
      for (const auto& c : u)
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("converse") {
  CHECK(converse(rel("01/00")) == rel("00/10"));
  CHECK(converse(Relation::identity(2)) == Relation::identity(2));
  const auto& u = all_relations(2);
  for (const auto& a : u) {
    CHECK(converse(converse(a)) == a);
    for (const auto& b : u)
      CHECK(converse(compose(a, b)) == compose(converse(b), converse(a)));
  }
}

TEST_CASE("complement and De Morgan") {
  CHECK(complement(Relation::identity(2)) == rel("01/10"));
  CHECK(complement(Relation::empty(2)) == Relation::universal(2));
  CHECK(complement(rel("10/00")) == rel("01/11"));
  const auto& u = all_relations(2);
  for (const auto& a : u) {
    CHECK(complement(complement(a)) == a);
    for (const auto& b : u) {
      CHECK(complement(set_union(a, b)) ==
            set_intersect(complement(a), complement(b)));
      CHECK(complement(set_intersect(a, b)) ==
            set_union(complement(a), complement(b)));
    }
  }
}

TEST_CASE("lattice operations") {
  CHECK(set_union(Relation::identity(2), rel("01/10")) ==
        Relation::universal(2));
  CHECK(set_intersect(Relation::identity(2), rel("01/10")) ==
        Relation::empty(2));
  for (const auto& a : all_relations(2)) {
    CHECK(set_intersect(a, Relation::universal(2)) == a);
    CHECK(is_subset(Relation::empty(2), a));
    CHECK(is_subset(a, Relation::universal(2)));
  }
  CHECK_FALSE(is_subset(Relation::identity(2), rel("01/10")));
}

TEST_CASE("residuals") {
  const auto& u = all_relations(2);
  for (const auto& a : u) {
    CHECK(max_right_solution(Relation::identity(2), a) == a);
    CHECK(max_left_solution(Relation::identity(2), a) == a);
  }
  CHECK(max_right_solution(Relation::universal(2), Relation::universal(2)) ==
        Relation::universal(2));
  CHECK(max_left_solution(Relation::universal(2), Relation::empty(2)) ==
        Relation::empty(2));
  // Theorem K over all of B_2^3, plus the left/right mirror.
  for (const auto& a : u)
    for (const auto& b : u) {
      Relation r = max_right_solution(b, a);
      for (const auto& x : u) {
        CHECK(is_subset(compose(b, x), a) == is_subset(x, r));
        CHECK(is_subset(compose(x, b), a) ==
              is_subset(x, max_left_solution(b, a)));
      }
      CHECK(max_left_solution(b, a) ==
            converse(max_right_solution(converse(b), converse(a))));
    }
}

TEST_CASE("divisibility agrees with exhaustive search") {
  const auto& u = all_relations(2);
  CHECK(divides_right(Relation::empty(2), Relation::empty(2)));
  for (const auto& a : u) CHECK(divides_right(Relation::identity(2), a));
  for (const auto& a : u)
    for (const auto& b : u) {
      bool right = false, left = false;
      for (const auto& x : u) {
        right = right || compose(b, x) == a;
        left = left || compose(x, b) == a;
      }
      CHECK(divides_right(b, a) == right);
      CHECK(divides_left(b, a) == left);
      // Residual maximality on the exact solutions.
      if (right)
        for (const auto& x : u)
          if (compose(b, x) == a)
            CHECK(is_subset(x, max_right_solution(b, a)));
    }
}

TEST_CASE("structural predicates") {
  CHECK(is_preorder(Relation::universal(2)));
  CHECK(is_preorder(Relation::identity(2)));
  CHECK_FALSE(is_preorder(rel("01/00")));
  CHECK(is_partial_injection(Relation::identity(2)));
  CHECK(is_permutation(Relation::identity(2)));
  CHECK(is_partial_injection(rel("10/00")));
  CHECK_FALSE(is_permutation(rel("10/00")));
  CHECK_FALSE(is_partial_injection(Relation::universal(2)));
  CHECK_FALSE(is_permutation(Relation::universal(2)));
}

TEST_CASE("text format") {
  Relation a = rel("01/00");
  CHECK(a.to_text() == "2\n01\n00\n");
  CHECK(Relation::from_text(a.to_text()) == a);
  for (const auto& r : all_relations(2))
    CHECK(Relation::from_text(r.to_text()) == r);
  CHECK_THROWS_AS(Relation::from_text("2\n01\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(Relation::from_text("2\n012\n000\n"), std::invalid_argument);
  CHECK_THROWS_AS(Relation::from_text("x\n"), std::invalid_argument);
  CHECK_THROWS_AS(Relation::from_text("2\n01\n0x\n"), std::invalid_argument);
  CHECK(Relation::from_text("0\n") == Relation::empty(0));
}

TEST_CASE("enumeration") {
  CHECK(all_relations(0).size() == 1);
  CHECK(all_relations(1).size() == 2);
  CHECK(all_relations(2).size() == 16);
  // Canonical order: ascending bit code.
  const auto& u = all_relations(2);
  for (size_t i = 0; i < u.size(); ++i) CHECK(u[i].code() == i);
  CHECK_THROWS_AS(all_relations(5), std::invalid_argument);
}
