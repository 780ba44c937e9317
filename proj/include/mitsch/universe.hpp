// Canonical enumeration of a whole monoid (B_n or P_n at desk scale),
// with an index lookup, the full Cayley table, and the idempotent set.
// Quadratic sweeps and the definitional order tests reduce to index
// arithmetic once the table is built.

#ifndef MITSCH_UNIVERSE_HPP_
#define MITSCH_UNIVERSE_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mitsch/partition.hpp"
#include "mitsch/relation.hpp"

namespace mitsch {

enum class UniverseKind { relations, partitions };

inline std::string to_string(UniverseKind kind) {
  return kind == UniverseKind::relations ? "relations" : "partitions";
}

template <typename Element>
class UniverseTable {
 public:
  UniverseTable(UniverseKind kind, int n, std::vector<Element> elements)
      : kind_(kind), n_(n), elements_(std::move(elements)) {
    for (size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], static_cast<int>(i));
    if (index_.size() != elements_.size())
      throw std::logic_error("universe: duplicate elements");
  }

  UniverseKind kind() const { return kind_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& operator[](int i) const { return elements_[i]; }

  int index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
      throw std::invalid_argument("universe: element not in table");
    return it->second;
  }

  // product(i, j) = index of elements[i] * elements[j]; built on demand.
  const std::vector<int32_t>& cayley() const {
    if (cayley_.empty()) {
      int m = size();
      cayley_.resize(static_cast<size_t>(m) * m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          cayley_[static_cast<size_t>(i) * m + j] =
              index_of(compose(elements_[i], elements_[j]));
    }
    return cayley_;
  }

  int product(int i, int j) const {
    return cayley()[static_cast<size_t>(i) * size() + j];
  }

  const std::vector<int>& idempotents() const {
    if (idempotents_.empty() && !idempotents_built_) {
      for (int i = 0; i < size(); ++i)
        if (product(i, i) == i) idempotents_.push_back(i);
      idempotents_built_ = true;
    }
    return idempotents_;
  }

  // Definitional natural-order test by index: a <= b iff a = b, or there
  // is x with a = ax = bx and there is y with a = yb.
  bool natural_le(int a, int b) const {
    if (a == b) return true;
    int m = size();
    bool found_x = false;
    for (int x = 0; x < m && !found_x; ++x)
      found_x = product(a, x) == a && product(b, x) == a;
    if (!found_x) return false;
    for (int y = 0; y < m; ++y)
      if (product(y, b) == a) return true;
    return false;
  }

 private:
  UniverseKind kind_;
  int n_;
  std::vector<Element> elements_;
  std::map<Element, int> index_;
  mutable std::vector<int32_t> cayley_;
  mutable std::vector<int> idempotents_;
  mutable bool idempotents_built_ = false;
};

using RelationUniverse = UniverseTable<Relation>;
using PartitionUniverse = UniverseTable<Partition>;

inline RelationUniverse enumerate_relations(int n, bool force = false) {
  return RelationUniverse(UniverseKind::relations, n, all_relations(n, force));
}

inline PartitionUniverse enumerate_partitions(int n, bool force = false) {
  return PartitionUniverse(UniverseKind::partitions, n,
                           all_partitions(n, force));
}

}  // namespace mitsch

#endif  // MITSCH_UNIVERSE_HPP_
