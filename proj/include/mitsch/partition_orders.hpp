// The natural order on the partition monoid: definitional oracle,
// an idempotent-witness fast test (validated against the oracle, never
// substituted for it in verification sweeps), and the two composite
// preorder criteria through the extreme partitions d and k.

#ifndef MITSCH_PARTITION_ORDERS_HPP_
#define MITSCH_PARTITION_ORDERS_HPP_

#include <stdexcept>

#include "mitsch/partition.hpp"

namespace mitsch {

inline bool mitsch_le_oracle(const Partition& a, const Partition& b,
                             bool force = false) {
  if (a.n() != b.n())
    throw std::invalid_argument("mitsch_le_oracle: dimension mismatch");
  if (a.n() > 3 && !force)
    throw std::invalid_argument("mitsch_le_oracle: universe too large");
  if (a == b) return true;
  const auto& universe = all_partitions(a.n(), force);
  bool found_x = false;
  for (const Partition& x : universe)
    if (compose(a, x) == a && compose(b, x) == a) {
      found_x = true;
      break;
    }
  if (!found_x) return false;
  for (const Partition& y : universe)
    if (compose(y, b) == a) return true;
  return false;
}

// Idempotent-witness form: a = b, or a = e b = b f for idempotents e, f.
// Equivalence with the definitional test is checked exhaustively at n = 2
// and by sampling at n = 3 (suite oracle-fast-agreement); it is not taken
// on trust beyond that.
inline bool mitsch_le_fast(const Partition& a, const Partition& b,
                           bool force = false) {
  if (a.n() != b.n())
    throw std::invalid_argument("mitsch_le_fast: dimension mismatch");
  if (a.n() > 3 && !force)
    throw std::invalid_argument("mitsch_le_fast: universe too large");
  if (a == b) return true;
  const auto& universe = all_partitions(a.n(), force);
  bool found_e = false;
  for (const Partition& e : universe)
    if (compose(e, e) == e && compose(e, b) == a) {
      found_e = true;
      break;
    }
  if (!found_e) return false;
  for (const Partition& f : universe)
    if (compose(f, f) == f && compose(b, f) == a) return true;
  return false;
}

// a (rincl ; <=) b iff a d a contains b d b in refinement.
inline bool comp_supset_then_le(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("comp_supset_then_le: dimension mismatch");
  Partition d = Partition::trivial_d(a.n());
  return refinement_le(compose(compose(b, d), b), compose(compose(a, d), a));
}

// a (incl ; <=) b iff a k a refines into b k b.
inline bool comp_subset_then_le(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("comp_subset_then_le: dimension mismatch");
  Partition k = Partition::universal_k(a.n());
  return refinement_le(compose(compose(a, k), a), compose(compose(b, k), b));
}

}  // namespace mitsch

#endif  // MITSCH_PARTITION_ORDERS_HPP_
