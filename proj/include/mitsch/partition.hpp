// Partition diagrams over two rows of n vertices: the elements of the
// partition monoid P_n.  Vertices 0..n-1 are the top row, n..2n-1 the
// bottom row (rendered as 1..n and 1'..n').  A partition is stored as a
// restricted-growth string over the 2n vertices, which is exactly the
// canonical block form: blocks numbered by least vertex, so equality is
// label-vector equality.

#ifndef MITSCH_PARTITION_HPP_
#define MITSCH_PARTITION_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mitsch {

namespace detail {

// Plain union-find over a fixed vertex count; fresh per composition.
class DisjointSet {
 public:
  explicit DisjointSet(int count) : parent_(count) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[y] = x;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

class Partition {
 public:
  Partition() : n_(0) {}

  // Labels need not be canonical; they are renumbered in first-occurrence
  // order on construction.
  Partition(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("partition: negative ground set");
    if (labels_.size() != static_cast<size_t>(2 * n))
      throw std::invalid_argument("partition: wrong vertex count");
    canonicalise();
  }

  static Partition trivial_d(int n) {
    std::vector<int> labels(2 * n);
    std::iota(labels.begin(), labels.end(), 0);
    return Partition(n, std::move(labels));
  }

  static Partition universal_k(int n) {
    return Partition(n, std::vector<int>(2 * n, 0));
  }

  static Partition identity(int n) {
    std::vector<int> labels(2 * n);
    for (int i = 0; i < n; ++i) labels[i] = labels[n + i] = i;
    return Partition(n, std::move(labels));
  }

  int n() const { return n_; }
  int num_blocks() const { return num_blocks_; }
  int block_of(int vertex) const { return labels_[vertex]; }
  const std::vector<int>& labels() const { return labels_; }

  bool same_block(int v, int w) const { return labels_[v] == labels_[w]; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.labels_ < b.labels_;
  }

  // Product by the path rule: components of the three-row graph with a's
  // blocks on rows 0,1 and b's blocks on rows 1,2, restricted to the
  // outer rows.
  friend Partition compose(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("compose: dimension mismatch");
    int n = a.n_;
    detail::DisjointSet ds(3 * n);
    for (int v = 1; v < 2 * n; ++v)
      for (int w = 0; w < v; ++w)
        if (a.same_block(v, w)) ds.unite(v, w);
    // b lives on rows 1,2: its vertex u maps to u + n.
    for (int v = 1; v < 2 * n; ++v)
      for (int w = 0; w < v; ++w)
        if (b.same_block(v, w)) ds.unite(v + n, w + n);
    std::vector<int> labels(2 * n);
    for (int i = 0; i < n; ++i) {
      labels[i] = ds.find(i);
      labels[n + i] = ds.find(2 * n + i);
    }
    return Partition(n, std::move(labels));
  }

  // The involution swapping the two rows.  P_n is a regular *-semigroup:
  // a star(a) a = a.
  friend Partition star(const Partition& a) {
    int n = a.n_;
    std::vector<int> labels(2 * n);
    for (int i = 0; i < n; ++i) {
      labels[i] = a.labels_[n + i];
      labels[n + i] = a.labels_[i];
    }
    return Partition(n, std::move(labels));
  }

  // Refinement: every block of a lies inside a block of b.
  friend bool refinement_le(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("refinement_le: dimension mismatch");
    // block representative -> b-label of its first vertex
    std::vector<int> image(a.num_blocks_, -1);
    for (int v = 0; v < 2 * a.n_; ++v) {
      int blk = a.labels_[v];
      if (image[blk] < 0)
        image[blk] = b.labels_[v];
      else if (image[blk] != b.labels_[v])
        return false;
    }
    return true;
  }

  bool has_transversal() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (labels_[i] == labels_[n_ + j]) return true;
    return false;
  }

  // Every block meets both rows.
  bool is_block_bijection() const {
    std::vector<bool> top(num_blocks_, false), bot(num_blocks_, false);
    for (int i = 0; i < n_; ++i) {
      top[labels_[i]] = true;
      bot[labels_[n_ + i]] = true;
    }
    for (int b = 0; b < num_blocks_; ++b)
      if (!top[b] || !bot[b]) return false;
    return true;
  }

  // Every block is a transversal pair {i, j'} or a singleton.
  bool is_partial_injection_diagram() const {
    std::vector<int> top(num_blocks_, 0), bot(num_blocks_, 0);
    for (int i = 0; i < n_; ++i) {
      ++top[labels_[i]];
      ++bot[labels_[n_ + i]];
    }
    for (int b = 0; b < num_blocks_; ++b) {
      int size = top[b] + bot[b];
      if (size == 1) continue;
      if (size == 2 && top[b] == 1 && bot[b] == 1) continue;
      return false;
    }
    return true;
  }

  // Text format: blocks separated by '|', vertices space-separated,
  // bottom-row vertices with a trailing apostrophe.  Output is canonical;
  // input tolerates any order.  Example: "1 2 1' | 2'".
  std::string to_text() const {
    std::ostringstream os;
    std::vector<std::vector<int>> blocks(num_blocks_);
    for (int v = 0; v < 2 * n_; ++v) blocks[labels_[v]].push_back(v);
    for (int b = 0; b < num_blocks_; ++b) {
      if (b > 0) os << " | ";
      for (size_t k = 0; k < blocks[b].size(); ++k) {
        if (k > 0) os << ' ';
        int v = blocks[b][k];
        if (v < n_)
          os << v + 1;
        else
          os << v - n_ + 1 << '\'';
      }
    }
    return os.str();
  }

  static Partition from_text(const std::string& line) {
    struct Tok {
      int value;
      bool primed;
    };
    std::vector<std::vector<Tok>> groups(1);
    size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '|') {
        groups.emplace_back();
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        int v = 0;
        while (i < line.size() &&
               std::isdigit(static_cast<unsigned char>(line[i])))
          v = v * 10 + (line[i++] - '0');
        bool primed = i < line.size() && line[i] == '\'';
        if (primed) ++i;
        groups.back().push_back({v, primed});
      } else {
        throw std::invalid_argument(std::string("partition: bad character '") +
                                    c + "'");
      }
    }
    int n = 0;
    for (const auto& g : groups)
      for (const Tok& t : g) {
        if (t.value < 1)
          throw std::invalid_argument("partition: vertices start at 1");
        n = std::max(n, t.value);
      }
    std::vector<int> labels(2 * n, -1);
    int next = 0;
    for (const auto& g : groups) {
      if (g.empty()) continue;
      for (const Tok& t : g) {
        int v = t.primed ? n + t.value - 1 : t.value - 1;
        if (labels[v] != -1)
          throw std::invalid_argument("partition: duplicate vertex");
        labels[v] = next;
      }
      ++next;
    }
    for (int v = 0; v < 2 * n; ++v)
      if (labels[v] == -1)
        throw std::invalid_argument("partition: vertices do not cover 1.." +
                                    std::to_string(n) + " on both rows");
    return Partition(n, std::move(labels));
  }

 private:
  void canonicalise() {
    std::map<int, int> renumber;
    for (int& l : labels_) {
      auto [it, fresh] = renumber.try_emplace(l, (int)renumber.size());
      (void)fresh;
      l = it->second;
    }
    num_blocks_ = static_cast<int>(renumber.size());
  }

  int n_;
  int num_blocks_ = 0;
  std::vector<int> labels_;
};

enum class PartitionKind { trivial_d, universal_k, identity };

inline Partition constant(PartitionKind kind, int n) {
  switch (kind) {
    case PartitionKind::trivial_d:
      return Partition::trivial_d(n);
    case PartitionKind::universal_k:
      return Partition::universal_k(n);
    default:
      return Partition::identity(n);
  }
}

// All of P_n in restricted-growth-string order (Bell(2n) elements).
// Cached; guarded to n <= 3 unless forced.
inline const std::vector<Partition>& all_partitions(int n, bool force = false) {
  if (n < 0 || n > 4 || (n > 3 && !force))
    throw std::invalid_argument("all_partitions: universe too large (n=" +
                                std::to_string(n) + ")");
  static std::mutex mu;
  static std::vector<Partition> cache[5];
  std::lock_guard<std::mutex> lock(mu);
  auto& out = cache[n];
  if (out.empty()) {
    int m = 2 * n;
    std::vector<int> rgs(std::max(m, 1), 0);
    if (m == 0) {
      out.push_back(Partition(0, {}));
      return out;
    }
    // Standard RGS enumeration: rgs[0] = 0, rgs[k] <= 1 + max of prefix.
    while (true) {
      out.push_back(Partition(n, std::vector<int>(rgs.begin(), rgs.begin() + m)));
      int k = m - 1;
      for (; k > 0; --k) {
        int prefix_max = 0;
        for (int j = 0; j < k; ++j) prefix_max = std::max(prefix_max, rgs[j]);
        if (rgs[k] <= prefix_max) break;
      }
      if (k == 0) break;
      ++rgs[k];
      for (int j = k + 1; j < m; ++j) rgs[j] = 0;
    }
  }
  return out;
}

}  // namespace mitsch

#endif  // MITSCH_PARTITION_HPP_
