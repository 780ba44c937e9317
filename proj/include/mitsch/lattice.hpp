// Preorders materialised as boolean matrices over an enumerated universe,
// with matrix composition, intersection, closure-joins, and generation of
// the sublattice of preorders spanned by a set of generators, emitted as
// a Hasse diagram in DOT.

#ifndef MITSCH_LATTICE_HPP_
#define MITSCH_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mitsch/partition_orders.hpp"
#include "mitsch/relation_orders.hpp"
#include "mitsch/universe.hpp"

namespace mitsch {

class PreorderMatrix {
 public:
  PreorderMatrix() : m_(0), words_per_row_(0) {}

  PreorderMatrix(int m, std::string name)
      : m_(m),
        words_per_row_((m + 63) / 64),
        bits_(static_cast<size_t>(m) * words_per_row_, 0),
        name_(std::move(name)) {}

  static PreorderMatrix equality(int m) {
    PreorderMatrix p(m, "eq");
    for (int i = 0; i < m; ++i) p.set(i, i, true);
    return p;
  }

  static PreorderMatrix all_ones(int m, std::string name = "all") {
    PreorderMatrix p(m, std::move(name));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) p.set(i, j, true);
    return p;
  }

  int size() const { return m_; }
  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }

  bool get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)] >>
            (j & 63)) &
           1;
  }

  void set(int i, int j, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)];
    if (v)
      w |= uint64_t(1) << (j & 63);
    else
      w &= ~(uint64_t(1) << (j & 63));
  }

  bool same_bits(const PreorderMatrix& other) const {
    return m_ == other.m_ && bits_ == other.bits_;
  }

  // Containment of relations: every pair of *this is a pair of other.
  bool contained_in(const PreorderMatrix& other) const {
    require_same_size(other);
    for (size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k] & ~other.bits_[k]) return false;
    return true;
  }

  uint64_t stable_hash() const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (uint64_t w : bits_) {
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (w >> (8 * byte)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    return h;
  }

  friend PreorderMatrix compose_preorders(const PreorderMatrix& p,
                                          const PreorderMatrix& q) {
    p.require_same_size(q);
    // bits[i][j] = exists t: p[i][t] and q[t][j]
    PreorderMatrix r(p.m_, p.name_ + ";" + q.name_);
    for (int i = 0; i < p.m_; ++i)
      for (int t = 0; t < p.m_; ++t)
        if (p.get(i, t))
          for (int k = 0; k < p.words_per_row_; ++k)
            r.bits_[static_cast<size_t>(i) * p.words_per_row_ + k] |=
                q.bits_[static_cast<size_t>(t) * p.words_per_row_ + k];
    return r;
  }

  friend PreorderMatrix intersect_preorders(const PreorderMatrix& p,
                                            const PreorderMatrix& q) {
    p.require_same_size(q);
    PreorderMatrix r(p.m_, p.name_ + "&" + q.name_);
    for (size_t k = 0; k < p.bits_.size(); ++k)
      r.bits_[k] = p.bits_[k] & q.bits_[k];
    return r;
  }

  friend PreorderMatrix union_bits(const PreorderMatrix& p,
                                   const PreorderMatrix& q) {
    p.require_same_size(q);
    PreorderMatrix r(p.m_, p.name_ + "|" + q.name_);
    for (size_t k = 0; k < p.bits_.size(); ++k)
      r.bits_[k] = p.bits_[k] | q.bits_[k];
    return r;
  }

  // Least reflexive-transitive matrix containing the union of p and q:
  // the join in the lattice of preorders.  Iterated squaring to fixpoint.
  friend PreorderMatrix closure_join(const PreorderMatrix& p,
                                     const PreorderMatrix& q) {
    PreorderMatrix r = union_bits(union_bits(p, q), equality(p.m_));
    r.name_ = p.name_ + "v" + q.name_;
    while (true) {
      PreorderMatrix next = union_bits(r, compose_preorders(r, r));
      if (next.same_bits(r)) return r;
      next.name_ = r.name_;
      r = std::move(next);
    }
  }

  friend bool is_preorder_matrix(const PreorderMatrix& p) {
    for (int i = 0; i < p.m_; ++i)
      if (!p.get(i, i)) return false;
    return compose_preorders(p, p).contained_in(p);
  }

  friend bool is_order_matrix(const PreorderMatrix& p) {
    if (!is_preorder_matrix(p)) return false;
    for (int i = 0; i < p.m_; ++i)
      for (int j = i + 1; j < p.m_; ++j)
        if (p.get(i, j) && p.get(j, i)) return false;
    return true;
  }

  // Least-index pair present in q but not in p, if any.
  friend std::optional<std::pair<int, int>> find_separating_witness(
      const PreorderMatrix& p, const PreorderMatrix& q) {
    p.require_same_size(q);
    for (int i = 0; i < p.m_; ++i)
      for (int j = 0; j < p.m_; ++j)
        if (q.get(i, j) && !p.get(i, j)) return std::make_pair(i, j);
    return std::nullopt;
  }

 private:
  void require_same_size(const PreorderMatrix& other) const {
    if (m_ != other.m_)
      throw std::invalid_argument("preorder matrix: universe mismatch");
  }

  int m_;
  int words_per_row_;
  std::vector<uint64_t> bits_;
  std::string name_;
};

// The eight named predicates of the study, in a fixed order.
inline const std::vector<std::string>& named_predicates() {
  static const std::vector<std::string> names = {
      "eq",
      "mitsch",
      "incl",
      "rincl",
      "mitsch_and_incl",
      "mitsch_and_rincl",
      "incl_then_mitsch",
      "rincl_then_mitsch",
  };
  return names;
}

template <typename Element>
PreorderMatrix materialise_pred(
    const UniverseTable<Element>& u, const std::string& name,
    const std::function<bool(const Element&, const Element&)>& pred) {
  PreorderMatrix p(u.size(), name);
  for (int i = 0; i < u.size(); ++i)
    for (int j = 0; j < u.size(); ++j)
      if (pred(u[i], u[j])) p.set(i, j, true);
  return p;
}

inline PreorderMatrix materialise(const RelationUniverse& u,
                                  const std::string& name) {
  using R = const Relation&;
  if (name == "eq") return PreorderMatrix::equality(u.size());
  if (name == "mitsch")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return mitsch_le(a, b); });
  if (name == "incl")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return is_subset(a, b); });
  if (name == "rincl")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return is_subset(b, a); });
  if (name == "mitsch_and_incl")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return meet_with_inclusion(a, b); });
  if (name == "mitsch_and_rincl")
    return materialise_pred<Relation>(u, name,
                            [](R a, R b) { return meet_with_reverse_inclusion(a, b); });
  if (name == "incl_then_mitsch")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return comp_subset_then_le(a, b); });
  if (name == "rincl_then_mitsch")
    return materialise_pred<Relation>(u, name, [](R a, R b) { return comp_supset_then_le(a, b); });
  throw std::invalid_argument("materialise: unknown predicate '" + name + "'");
}

inline PreorderMatrix materialise(const PartitionUniverse& u,
                                  const std::string& name) {
  using P = const Partition&;
  if (name == "eq") return PreorderMatrix::equality(u.size());
  if (name == "mitsch") {
    // Definitional test through the Cayley table; no unproved shortcut.
    PreorderMatrix p(u.size(), name);
    for (int i = 0; i < u.size(); ++i)
      for (int j = 0; j < u.size(); ++j)
        if (u.natural_le(i, j)) p.set(i, j, true);
    return p;
  }
  if (name == "incl")
    return materialise_pred<Partition>(u, name, [](P a, P b) { return refinement_le(a, b); });
  if (name == "rincl")
    return materialise_pred<Partition>(u, name, [](P a, P b) { return refinement_le(b, a); });
  if (name == "mitsch_and_incl" || name == "mitsch_and_rincl") {
    PreorderMatrix le = materialise(u, "mitsch");
    PreorderMatrix inc = materialise(u, name == "mitsch_and_incl" ? "incl" : "rincl");
    PreorderMatrix p = intersect_preorders(le, inc);
    p.rename(name);
    return p;
  }
  if (name == "incl_then_mitsch")
    return materialise_pred<Partition>(u, name, [](P a, P b) { return comp_subset_then_le(a, b); });
  if (name == "rincl_then_mitsch")
    return materialise_pred<Partition>(u, name, [](P a, P b) { return comp_supset_then_le(a, b); });
  throw std::invalid_argument("materialise: unknown predicate '" + name + "'");
}

struct SublatticeNode {
  PreorderMatrix matrix;
  std::string label;
  bool is_order = false;
};

struct Sublattice {
  std::vector<SublatticeNode> nodes;          // sorted by label
  std::vector<std::pair<int, int>> edges;     // Hasse covers, lower -> upper
};

// Close {equality, generators} under intersection and closure-join,
// label nodes by the named matrices where they coincide, and compute the
// covering edges of the containment order.
template <typename Universe>
Sublattice generate_sublattice(const Universe& u,
                               std::vector<PreorderMatrix> generators) {
  std::vector<PreorderMatrix> members;
  auto add = [&members](const PreorderMatrix& p) {
    for (const auto& q : members)
      if (q.same_bits(p)) return false;
    members.push_back(p);
    return true;
  };
  add(PreorderMatrix::equality(u.size()));
  for (auto& g : generators) add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    size_t count = members.size();
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i + 1; j < count; ++j) {
        if (add(intersect_preorders(members[i], members[j]))) grew = true;
        if (add(closure_join(members[i], members[j]))) grew = true;
      }
  }

  // Label by canonical name when the bits coincide, else by stable hash.
  std::vector<std::pair<std::string, PreorderMatrix>> named;
  for (const auto& name : named_predicates())
    named.emplace_back(name, materialise(u, name));

  Sublattice lat;
  for (auto& m : members) {
    SublatticeNode node;
    node.is_order = is_order_matrix(m);
    node.label = "";
    for (const auto& [name, mat] : named)
      if (m.same_bits(mat)) {
        node.label = name;
        break;
      }
    if (node.label.empty()) {
      std::ostringstream os;
      os << "p_" << std::hex << m.stable_hash();
      node.label = os.str();
    }
    node.matrix = std::move(m);
    lat.nodes.push_back(std::move(node));
  }
  std::sort(lat.nodes.begin(), lat.nodes.end(),
            [](const SublatticeNode& a, const SublatticeNode& b) {
              return a.label < b.label;
            });

  int count = static_cast<int>(lat.nodes.size());
  auto strictly_below = [&lat](int i, int j) {
    return !lat.nodes[i].matrix.same_bits(lat.nodes[j].matrix) &&
           lat.nodes[i].matrix.contained_in(lat.nodes[j].matrix);
  };
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!strictly_below(i, j)) continue;
      bool cover = true;
      for (int t = 0; t < count && cover; ++t)
        if (t != i && t != j && strictly_below(i, t) && strictly_below(t, j))
          cover = false;
      if (cover) lat.edges.emplace_back(i, j);
    }
  std::sort(lat.edges.begin(), lat.edges.end());
  return lat;
}

// Deterministic DOT rendering: nodes in label order, edges bottom-to-top.
inline std::string to_dot(const Sublattice& lat,
                          const std::string& graph_name = "hasse") {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=BT;\n";
  for (const auto& node : lat.nodes) {
    os << "  \"" << node.label << "\" [shape=circle, style="
       << (node.is_order ? "filled" : "solid") << "];\n";
  }
  for (const auto& [lo, hi] : lat.edges)
    os << "  \"" << lat.nodes[lo].label << "\" -> \"" << lat.nodes[hi].label
       << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mitsch

#endif  // MITSCH_LATTICE_HPP_
