// Binary relations on a finite ground set {1..n}, with the full
// relation-algebra signature: composition, converse, complement, the
// boolean lattice, residuals and divisibility.
//
// Representation is a dense packed-bit incidence matrix; all arithmetic
// is exact boolean, and every operation is a pure function on immutable
// values.

#ifndef MITSCH_RELATION_HPP_
#define MITSCH_RELATION_HPP_

#include <cstdint>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mitsch {

class Relation {
 public:
  Relation() : n_(0), words_per_row_(0) {}

  explicit Relation(int n)
      : n_(check_size(n)),
        words_per_row_((n + 63) / 64),
        bits_(static_cast<size_t>(n) * words_per_row_, 0) {}

  static Relation identity(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i, true);
    return r;
  }

  static Relation universal(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.set(i, j, true);
    return r;
  }

  static Relation empty(int n) { return Relation(n); }

  // Row-major bit code: bit i*n+j is the incidence of (i,j).  Requires
  // n*n <= 64; used for the canonical enumeration order of B_n.
  static Relation from_code(int n, uint64_t code) {
    if (n * n > 64) throw std::invalid_argument("from_code: n too large");
    Relation r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((code >> (i * n + j)) & 1) r.set(i, j, true);
    return r;
  }

  int n() const { return n_; }

  bool get(int i, int j) const {
    return (row_word(i, j >> 6) >> (j & 63)) & 1;
  }

  void set(int i, int j, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(i) * words_per_row_ + (j >> 6)];
    if (v)
      w |= uint64_t(1) << (j & 63);
    else
      w &= ~(uint64_t(1) << (j & 63));
  }

  uint64_t code() const {
    if (n_ * n_ > 64) throw std::logic_error("code: n too large");
    uint64_t c = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) c |= uint64_t(1) << (i * n_ + j);
    return c;
  }

  size_t pair_count() const {
    size_t c = 0;
    for (uint64_t w : bits_) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) {
    return !(a == b);
  }
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    // Row-major code order (lexicographic from the low bits up).
    for (size_t k = a.bits_.size(); k-- > 0;)
      if (a.bits_[k] != b.bits_[k]) return a.bits_[k] < b.bits_[k];
    return false;
  }

  friend Relation compose(const Relation& a, const Relation& b) {
    require_same_n(a, b, "compose");
    Relation r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j)
        if (a.get(i, j)) r.or_row(i, b, j);
    return r;
  }

  friend Relation converse(const Relation& a) {
    Relation r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j)
        if (a.get(i, j)) r.set(j, i, true);
    return r;
  }

  friend Relation complement(const Relation& a) {
    Relation r(a.n_);
    for (size_t k = 0; k < a.bits_.size(); ++k) r.bits_[k] = ~a.bits_[k];
    r.mask_tail();
    return r;
  }

  friend Relation set_union(const Relation& a, const Relation& b) {
    require_same_n(a, b, "union");
    Relation r(a.n_);
    for (size_t k = 0; k < a.bits_.size(); ++k)
      r.bits_[k] = a.bits_[k] | b.bits_[k];
    return r;
  }

  friend Relation set_intersect(const Relation& a, const Relation& b) {
    require_same_n(a, b, "intersect");
    Relation r(a.n_);
    for (size_t k = 0; k < a.bits_.size(); ++k)
      r.bits_[k] = a.bits_[k] & b.bits_[k];
    return r;
  }

  friend bool is_subset(const Relation& a, const Relation& b) {
    require_same_n(a, b, "is_subset");
    for (size_t k = 0; k < a.bits_.size(); ++k)
      if (a.bits_[k] & ~b.bits_[k]) return false;
    return true;
  }

  // Text format: line 1 is n, then n rows of n characters from {0,1}.
  std::string to_text() const {
    std::ostringstream os;
    os << n_ << '\n';
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) os << (get(i, j) ? '1' : '0');
      os << '\n';
    }
    return os.str();
  }

  static Relation from_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("relation: missing size line");
    int n = 0;
    try {
      size_t pos = 0;
      n = std::stoi(line, &pos);
      while (pos < line.size() && std::isspace((unsigned char)line[pos])) ++pos;
      if (pos != line.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("relation: bad size line '" + line + "'");
    }
    Relation r(check_size(n));
    for (int i = 0; i < n; ++i) {
      if (!std::getline(in, line))
        throw std::invalid_argument("relation: missing row " +
                                    std::to_string(i + 1));
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (static_cast<int>(line.size()) != n)
        throw std::invalid_argument("relation: ragged row " +
                                    std::to_string(i + 1));
      for (int j = 0; j < n; ++j) {
        if (line[j] == '1')
          r.set(i, j, true);
        else if (line[j] != '0')
          throw std::invalid_argument("relation: bad character in row " +
                                      std::to_string(i + 1));
      }
    }
    return r;
  }

  static Relation from_text(const std::string& s) {
    std::istringstream is(s);
    return from_text(is);
  }

 private:
  static int check_size(int n) {
    if (n < 0) throw std::invalid_argument("relation: negative ground set");
    return n;
  }

  static void require_same_n(const Relation& a, const Relation& b,
                             const char* op) {
    if (a.n_ != b.n_)
      throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                  std::to_string(a.n_) + " vs " +
                                  std::to_string(b.n_) + ")");
  }

  uint64_t row_word(int i, int k) const {
    return bits_[static_cast<size_t>(i) * words_per_row_ + k];
  }

  // result row i |= b row j
  void or_row(int i, const Relation& b, int j) {
    for (int k = 0; k < words_per_row_; ++k)
      bits_[static_cast<size_t>(i) * words_per_row_ + k] |= b.row_word(j, k);
  }

  void mask_tail() {
    int tail = n_ & 63;
    if (tail == 0 || words_per_row_ == 0) return;
    uint64_t mask = (uint64_t(1) << tail) - 1;
    for (int i = 0; i < n_; ++i)
      bits_[static_cast<size_t>(i) * words_per_row_ + words_per_row_ - 1] &=
          mask;
  }

  int n_;
  int words_per_row_;
  std::vector<uint64_t> bits_;
};

enum class RelationKind { identity, universal, empty };

inline Relation constant(RelationKind kind, int n) {
  switch (kind) {
    case RelationKind::identity:
      return Relation::identity(n);
    case RelationKind::universal:
      return Relation::universal(n);
    default:
      return Relation::empty(n);
  }
}

// Greatest x (in inclusion) with compose(b, x) a subset of a: (b^-1 a^c)^c.
inline Relation max_right_solution(const Relation& b, const Relation& a) {
  return complement(compose(converse(b), complement(a)));
}

// Greatest x with compose(x, b) a subset of a: (a^c b^-1)^c.
inline Relation max_left_solution(const Relation& b, const Relation& a) {
  return complement(compose(complement(a), converse(b)));
}

// Does some x solve compose(b, x) == a?  The residual is the greatest
// candidate, so it suffices to test it.
inline bool divides_right(const Relation& b, const Relation& a) {
  return compose(b, max_right_solution(b, a)) == a;
}

inline bool divides_left(const Relation& b, const Relation& a) {
  return compose(max_left_solution(b, a), b) == a;
}

inline bool is_preorder(const Relation& a) {
  return is_subset(Relation::identity(a.n()), a) &&
         is_subset(compose(a, a), a);
}

inline bool is_partial_injection(const Relation& a) {
  for (int i = 0; i < a.n(); ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < a.n(); ++j) {
      row += a.get(i, j);
      col += a.get(j, i);
    }
    if (row > 1 || col > 1) return false;
  }
  return true;
}

inline bool is_permutation(const Relation& a) {
  for (int i = 0; i < a.n(); ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < a.n(); ++j) {
      row += a.get(i, j);
      col += a.get(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

// All of B_n in canonical (ascending bit-code) order.  Cached; guarded to
// n <= 3 unless forced.
inline const std::vector<Relation>& all_relations(int n, bool force = false) {
  if (n < 0 || n > 4 || (n > 3 && !force))
    throw std::invalid_argument("all_relations: universe too large (n=" +
                                std::to_string(n) + ")");
  static std::mutex mu;
  static std::vector<Relation> cache[5];
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) {
    uint64_t count = uint64_t(1) << (n * n);
    v.reserve(count);
    for (uint64_t c = 0; c < count; ++c) v.push_back(Relation::from_code(n, c));
  }
  return v;
}

}  // namespace mitsch

#endif  // MITSCH_RELATION_HPP_
