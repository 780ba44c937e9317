// Order and preorder predicates on B_X: the natural (Mitsch) order via
// its equational criterion and via the quantified definition, its
// conjunctions with inclusion, idempotent meet-witnesses, F(alpha)
// membership, and the two composite preorders.

#ifndef MITSCH_RELATION_ORDERS_HPP_
#define MITSCH_RELATION_ORDERS_HPP_

#include <optional>
#include <stdexcept>

#include "mitsch/relation.hpp"

namespace mitsch {

// Equational criterion: a <= b iff a = a r = b r = l b, where r and l are
// the right and left residuals of a by b.  Polynomial in n; no search.
inline bool mitsch_le(const Relation& a, const Relation& b) {
  Relation r = max_right_solution(b, a);
  if (compose(a, r) != a || compose(b, r) != a) return false;
  return compose(max_left_solution(b, a), b) == a;
}

// Definitional test: a <= b iff a = b, or there are x, y in B_n with
// a = ax = bx and a = yb.  x and y occur in disjoint conditions, so two
// independent linear scans over the universe suffice.
inline bool mitsch_le_oracle(const Relation& a, const Relation& b,
                             bool force = false) {
  if (a.n() != b.n())
    throw std::invalid_argument("mitsch_le_oracle: dimension mismatch");
  if (a.n() > 3 && !force)
    throw std::invalid_argument("mitsch_le_oracle: universe too large");
  if (a == b) return true;
  const auto& universe = all_relations(a.n(), force);
  bool found_x = false;
  for (const Relation& x : universe)
    if (compose(a, x) == a && compose(b, x) == a) {
      found_x = true;
      break;
    }
  if (!found_x) return false;
  for (const Relation& y : universe)
    if (compose(y, b) == a) return true;
  return false;
}

inline bool meet_with_inclusion(const Relation& a, const Relation& b) {
  return is_subset(a, b) && mitsch_le(a, b);
}

inline bool meet_with_reverse_inclusion(const Relation& a, const Relation& b) {
  return is_subset(b, a) && mitsch_le(a, b);
}

// Idempotent witnesses for a <= b with b a subset of a: epsilon and phi
// with epsilon = epsilon^2, phi = phi^2, identity inside epsilon, and
// a = b epsilon = phi b.  The residuals are exactly the inclusion-maximum
// such witnesses.
struct MeetWitness {
  Relation epsilon;
  Relation phi;
};

inline std::optional<MeetWitness> meet_rev_witnesses(const Relation& a,
                                                     const Relation& b) {
  if (!meet_with_reverse_inclusion(a, b)) return std::nullopt;
  MeetWitness w{max_right_solution(b, a), max_left_solution(b, a)};
  bool ok = compose(w.epsilon, w.epsilon) == w.epsilon &&
            compose(w.phi, w.phi) == w.phi &&
            is_subset(Relation::identity(a.n()), w.epsilon) &&
            compose(b, w.epsilon) == a && compose(w.phi, b) == a;
  if (!ok)
    throw std::logic_error("meet_rev_witnesses: witness laws violated");
  return w;
}

// Membership in F(alpha) = { beta : alpha beta = alpha = beta alpha },
// defined for preorders alpha.
inline bool in_F(const Relation& alpha, const Relation& beta) {
  if (!is_preorder(alpha))
    throw std::invalid_argument("in_F: alpha is not a preorder");
  return compose(alpha, beta) == alpha && compose(beta, alpha) == alpha;
}

// a (incl ; <=) b iff a w a is a subset of b w b, w the universal relation.
inline bool comp_subset_then_le(const Relation& a, const Relation& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("comp_subset_then_le: dimension mismatch");
  Relation w = Relation::universal(a.n());
  return is_subset(compose(compose(a, w), a), compose(compose(b, w), b));
}

// a (rincl ; <=) b holds for every pair: a contains the empty relation,
// which is below everything.  Kept as an operation so the lattice code
// treats all eight preorders uniformly.
inline bool comp_supset_then_le(const Relation& a, const Relation& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("comp_supset_then_le: dimension mismatch");
  return true;
}

}  // namespace mitsch

#endif  // MITSCH_RELATION_ORDERS_HPP_
