#ifndef MUTWB_COXETER_HPP
#define MUTWB_COXETER_HPP

// Generalized extended Dynkin diagrams, the Coxeter matrix, and the
// contragredient geometric representation of the associated Weyl group as
// exact integer matrices.
//
// Generator and vertex indices are 0-based here.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "matrix.hpp"

namespace mutwb {

/// Valuation (a, b) of an edge, read from its first endpoint.
struct Valuation {
  unsigned a = 1;
  unsigned b = 1;
  Valuation flipped() const { return {b, a}; }
  bool plain() const { return a == 1 && b == 1; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

/// Valued graph with optional loops. Each unordered pair {i, j} carries at
/// most one valuation, stored under (min, max) with the value at min first.
class ValuedDiagram {
public:
  using Pair = std::pair<std::size_t, std::size_t>;

  ValuedDiagram() = default;
  explicit ValuedDiagram(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }

  ValuedDiagram& add_edge(std::size_t i, std::size_t j, Valuation v = {}) {
    check(i);
    check(j);
    if (i == j)
      throw DomainError("use add_loop for loops");
    if (v.a == 0 || v.b == 0)
      throw DomainError("valuations must be positive");
    if (i < j)
      edges_[{i, j}] = v;
    else
      edges_[{j, i}] = v.flipped();
    return *this;
  }

  ValuedDiagram& add_loop(std::size_t i) {
    check(i);
    loops_.insert(i);
    return *this;
  }

  /// Valuation of the edge {i, j} read from i, if present.
  std::optional<Valuation> valuation(std::size_t i, std::size_t j) const {
    if (i == j)
      return std::nullopt;
    auto it = edges_.find({std::min(i, j), std::max(i, j)});
    if (it == edges_.end())
      return std::nullopt;
    return i < j ? it->second : it->second.flipped();
  }

  bool has_loop(std::size_t i) const { return loops_.count(i) != 0; }

  const std::map<Pair, Valuation>& edges() const noexcept { return edges_; }
  const std::set<std::size_t>& loops() const noexcept { return loops_; }

  bool connected() const {
    if (n_ == 0)
      return true;
    std::vector<bool> seen(n_, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n_; ++v)
        if (!seen[v] && valuation(u, v)) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  friend bool operator==(const ValuedDiagram&, const ValuedDiagram&) = default;

private:
  void check(std::size_t i) const {
    if (i >= n_)
      throw DomainError("diagram vertex " + std::to_string(i + 1) +
                        " out of range 1.." + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::map<Pair, Valuation> edges_;
  std::set<std::size_t> loops_;
};

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// Entry of a Coxeter matrix: a positive integer or infinity.
using CoxeterOrder = std::variant<unsigned, Infinity>;

inline bool is_finite(const CoxeterOrder& m) {
  return std::holds_alternative<unsigned>(m);
}

inline std::string to_string(const CoxeterOrder& m) {
  return is_finite(m) ? std::to_string(std::get<unsigned>(m)) : "inf";
}

class CoxeterMatrix {
public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::size_t n) : n_(n), m_(n * n, 2u) {
    for (std::size_t i = 0; i < n; ++i)
      m_[i * n + i] = 1u;
  }
  std::size_t size() const noexcept { return n_; }
  const CoxeterOrder& operator()(std::size_t i, std::size_t j) const {
    return m_[i * n_ + j];
  }
  CoxeterOrder& operator()(std::size_t i, std::size_t j) {
    return m_[i * n_ + j];
  }
  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<CoxeterOrder> m_;
};

namespace detail {

struct PairData {
  CoxeterOrder m;
  long kij;
  long kji;
};

// Coxeter exponent and (k_ij, k_ji) of one pair i != j.
inline PairData pair_data(const ValuedDiagram& d, std::size_t i,
                          std::size_t j) {
  auto v = d.valuation(i, j);
  if (!v)
    return {2u, 0, 0};
  const bool li = d.has_loop(i);
  const bool lj = d.has_loop(j);
  const auto reject = [&]() -> PairData {
    throw DomainError("not a generalized extended Dynkin configuration at "
                      "edge {" +
                      std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      "} with valuation (" + std::to_string(v->a) + "," +
                      std::to_string(v->b) + ")" +
                      (li || lj ? " and a loop" : ""));
  };
  const bool half = *v == Valuation{1, 2} || *v == Valuation{2, 1};
  if (!li && !lj) {
    if (v->plain())
      return {3u, 1, 1};
    if (half)
      return {4u, long(v->a), long(v->b)};
    if (*v == Valuation{1, 3} || *v == Valuation{3, 1})
      return {6u, long(v->a), long(v->b)};
    if (*v == Valuation{2, 2})
      return {Infinity{}, 2, 2};
    return reject();
  }
  if (li && lj) {
    if (v->plain())
      return {Infinity{}, 2, 2};
    return reject();
  }
  if (!v->plain() && !half)
    return reject();
  const CoxeterOrder m = v->plain() ? CoxeterOrder(4u) : CoxeterOrder(Infinity{});
  if (li)
    return {m, long(v->a), 2 * long(v->b)};
  return {m, 2 * long(v->a), long(v->b)};
}

} // namespace detail

/// m(i,i) = 1; m(i,j) from the edge type between i and j:
/// none -> 2, plain -> 3, plain with a loop at one end or (1,2)/(2,1) -> 4,
/// (1,3)/(3,1) -> 6, (2,2) or plain with loops at both ends or (1,2)/(2,1)
/// with a loop at one end -> infinity. Anything else throws DomainError.
inline CoxeterMatrix coxeter_matrix(const ValuedDiagram& d) {
  CoxeterMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j)
        m(i, j) = detail::pair_data(d, i, j).m;
  return m;
}

/// k(i,i) = -2; (k_ij, k_ji) = (a, b) for an (a, b) edge, (a, 2b) when i
/// carries a loop, (2, 2) for a plain edge with loops at both ends; 0 when
/// there is no edge. Plain edges read as (1, 1).
inline IntMatrix k_matrix(const ValuedDiagram& d) {
  IntMatrix k(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      k(i, j) = i == j ? -2 : detail::pair_data(d, i, j).kij;
  return k;
}

/// Diagram together with its Coxeter matrix and k-matrix.
class CoxeterSystem {
public:
  CoxeterSystem() = default;
  explicit CoxeterSystem(ValuedDiagram d)
      : diagram_(std::move(d)), m_(coxeter_matrix(diagram_)),
        k_(k_matrix(diagram_)) {
    generators_.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      IntMatrix g = IntMatrix::identity(rank());
      for (std::size_t j = 0; j < rank(); ++j)
        g(j, i) += k_(i, j);
      generators_.push_back(std::move(g));
    }
  }

  std::size_t rank() const noexcept { return diagram_.size(); }
  const ValuedDiagram& diagram() const noexcept { return diagram_; }
  const CoxeterMatrix& m() const noexcept { return m_; }
  const IntMatrix& k() const noexcept { return k_; }

  /// Matrix of the i-th generator acting on coordinate vectors:
  /// (M_i)_{j,l} = delta_{j,l} + k_{i,j} delta_{l,i}.
  const IntMatrix& generator(std::size_t i) const {
    if (i >= rank())
      throw DomainError("generator index " + std::to_string(i + 1) +
                        " out of range 1.." + std::to_string(rank()));
    return generators_[i];
  }

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.diagram_ == b.diagram_;
  }

private:
  ValuedDiagram diagram_;
  CoxeterMatrix m_;
  IntMatrix k_;
  std::vector<IntMatrix> generators_;
};

/// Sequence of generator indices.
using Word = std::vector<std::size_t>;

/// Weyl group element, identified with its matrix in the contragredient
/// geometric representation. That representation is faithful, so matrix
/// equality is element equality.
struct GroupElement {
  IntMatrix mat;

  static GroupElement identity(std::size_t n) {
    return {IntMatrix::identity(n)};
  }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
    return {x.mat * y.mat};
  }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  std::size_t hash() const { return mat.hash(); }
};

} // namespace mutwb

template <>
struct std::hash<mutwb::GroupElement> {
  std::size_t operator()(const mutwb::GroupElement& g) const {
    return g.hash();
  }
};

namespace mutwb {

inline GroupElement generator_matrix(const CoxeterSystem& sys, std::size_t i) {
  return {sys.generator(i)};
}

/// Product of generator matrices in word order; the empty word is the
/// identity.
inline GroupElement evaluate(const CoxeterSystem& sys, const Word& w) {
  GroupElement g = GroupElement::identity(sys.rank());
  for (std::size_t i : w)
    g.mat = g.mat * sys.generator(i);
  return g;
}

inline Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

namespace detail {

// Sign of row i: +1 if all entries >= 0, -1 if all <= 0. Rows of an element
// matrix are roots, so mixed signs mean the matrix is not a group element.
inline int row_sign(const IntMatrix& m, std::size_t i) {
  bool pos = false, neg = false;
  for (const Integer& x : m.row(i)) {
    if (x > 0)
      pos = true;
    else if (x < 0)
      neg = true;
  }
  if (pos && neg)
    throw DomainError("matrix is not an element of the Weyl group");
  return neg ? -1 : 1;
}

} // namespace detail

/// True when l(s_i w) < l(w). Row i of the element matrix is the root
/// w^{-1}(alpha_i); it is negative exactly for left descents.
inline bool is_left_descent(const GroupElement& w, std::size_t i) {
  return detail::row_sign(w.mat, i) < 0;
}

/// Lexicographically smallest reduced word of `w`, by peeling off the
/// smallest left descent until the identity remains. Independent of any
/// enumeration table.
inline Word descent_normal_form(const CoxeterSystem& sys, GroupElement w,
                                std::size_t max_length = 1'000'000) {
  Word out;
  for (;;) {
    std::size_t a = sys.rank();
    for (std::size_t i = 0; i < sys.rank(); ++i)
      if (is_left_descent(w, i)) {
        a = i;
        break;
      }
    if (a == sys.rank())
      break;
    if (out.size() >= max_length)
      throw ResourceLimit("descent normal form exceeded length " +
                          std::to_string(max_length));
    out.push_back(a);
    w.mat = sys.generator(a) * w.mat;
  }
  if (!w.mat.is_identity())
    throw DomainError("matrix is not an element of the Weyl group");
  return out;
}

/// Length computed from root signs rather than from a table.
inline std::size_t descent_length(const CoxeterSystem& sys,
                                  const GroupElement& w) {
  return descent_normal_form(sys, w).size();
}

/// Breadth-first enumeration of W up to a length bound. Node 0 is the
/// identity; nodes appear in order of length, and within a length in
/// lexicographic order of their smallest reduced words, which is the word
/// each node stores.
class CayleyTable {
public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Node {
    GroupElement element;
    Word word;
    friend bool operator==(const Node&, const Node&) = default;
  };

  CayleyTable(const CoxeterSystem& sys, std::size_t max_length,
              std::size_t node_cap = 100000)
      : sys_(sys), max_length_(max_length) {
    add(GroupElement::identity(sys_.rank()), {}, node_cap);
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
      if (length(u) >= max_length_)
        continue;
      for (std::size_t i = 0; i < sys_.rank(); ++i) {
        GroupElement v = nodes_[u].element * generator_matrix(sys_, i);
        if (index_.count(v))
          continue;
        Word w = nodes_[u].word;
        w.push_back(i);
        add(std::move(v), std::move(w), node_cap);
      }
    }
    link();
  }

  /// Rebuilds a table from stored nodes, checking each word against its
  /// matrix and the node order against a fresh enumeration.
  static CayleyTable restore(const CoxeterSystem& sys, std::size_t max_length,
                             std::vector<Node> nodes) {
    CayleyTable t(sys, max_length, nodes.size() + 1);
    if (t.nodes_ != nodes)
      throw ParseError("stored table does not match its diagram");
    return t;
  }

  const CoxeterSystem& system() const noexcept { return sys_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  const GroupElement& element(std::size_t u) const {
    return nodes_.at(u).element;
  }
  const Word& word(std::size_t u) const { return nodes_.at(u).word; }
  std::size_t length(std::size_t u) const { return nodes_.at(u).word.size(); }

  std::optional<std::size_t> find(const GroupElement& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  /// Index of `g`; throws DepthExceeded when g lies beyond the table.
  std::size_t index_of(const GroupElement& g) const {
    auto u = find(g);
    if (!u)
      throw DepthExceeded("element lies beyond enumerated length " +
                          std::to_string(max_length_));
    return *u;
  }

  std::size_t index_of(const Word& w) const {
    return index_of(evaluate(sys_, w));
  }

  /// Index of u * s_i (right) or s_i * u (left), or npos if outside.
  std::size_t right(std::size_t u, std::size_t i) const {
    return right_.at(u * sys_.rank() + i);
  }
  std::size_t left(std::size_t u, std::size_t i) const {
    return left_.at(u * sys_.rank() + i);
  }

  std::size_t inverse(std::size_t u) const {
    return index_of(reversed(word(u)));
  }

  /// Number of elements of each length 0..max_length.
  std::vector<std::size_t> length_counts() const {
    std::vector<std::size_t> counts(max_length_ + 1, 0);
    for (const auto& node : nodes_)
      ++counts[node.word.size()];
    return counts;
  }

private:
  void add(GroupElement g, Word w, std::size_t node_cap) {
    if (nodes_.size() >= node_cap)
      throw ResourceLimit("enumeration exceeded node cap of " +
                          std::to_string(node_cap));
    index_.emplace(g, nodes_.size());
    nodes_.push_back({std::move(g), std::move(w)});
  }

  void link() {
    const std::size_t n = sys_.rank();
    right_.assign(nodes_.size() * n, npos);
    left_.assign(nodes_.size() * n, npos);
    for (std::size_t u = 0; u < nodes_.size(); ++u)
      for (std::size_t i = 0; i < n; ++i) {
        const IntMatrix& g = sys_.generator(i);
        if (auto v = find({nodes_[u].element.mat * g}))
          right_[u * n + i] = *v;
        if (auto v = find({g * nodes_[u].element.mat}))
          left_[u * n + i] = *v;
      }
  }

  CoxeterSystem sys_;
  std::size_t max_length_;
  std::vector<Node> nodes_;
  std::unordered_map<GroupElement, std::size_t> index_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
};

inline CayleyTable bfs_enumerate(const CoxeterSystem& sys,
                                 std::size_t max_length,
                                 std::size_t node_cap = 100000) {
  return CayleyTable(sys, max_length, node_cap);
}

/// Length of `g` from the table; DepthExceeded if beyond it.
inline std::size_t length_of(const CayleyTable& t, const GroupElement& g) {
  return t.length(t.index_of(g));
}

inline bool is_reduced(const CayleyTable& t, const Word& w) {
  return w.size() == length_of(t, evaluate(t.system(), w));
}

/// Subword criterion: v <= w iff some subword of the reduced word `w`
/// evaluates to v. Tracks the set of elements reachable by subwords of each
/// prefix, dropping any whose length can no longer reach l(v).
inline bool bruhat_leq_subword(const CayleyTable& t, const Word& v,
                               const Word& w) {
  if (!is_reduced(t, w))
    throw DomainError("bruhat_leq_subword needs a reduced word for w");
  const std::size_t target = t.index_of(v);
  const std::size_t lv = t.length(target);
  if (lv > w.size())
    return false;
  std::vector<std::size_t> states{0};
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const std::size_t remaining = w.size() - pos - 1;
    std::vector<std::size_t> next;
    std::unordered_set<std::size_t> seen;
    auto keep = [&](std::size_t u) {
      const std::size_t lu = t.length(u);
      if (lu > lv + remaining || lu + remaining < lv)
        return;
      if (seen.insert(u).second)
        next.push_back(u);
    };
    for (std::size_t u : states) {
      keep(u);
      const std::size_t moved = t.right(u, w[pos]);
      if (moved == CayleyTable::npos)
        throw DepthExceeded();
      keep(moved);
    }
    states = std::move(next);
  }
  return std::find(states.begin(), states.end(), target) != states.end();
}

/// Bruhat order as reachability in the digraph u -> u t (t a reflection,
/// l(u) < l(u t)) restricted to the table. Reflections are x s_i x^{-1}
/// for x in the table, which covers every reflection joining two table
/// elements.
class BruhatGraph {
public:
  explicit BruhatGraph(const CayleyTable& t) : table_(&t) {
    std::unordered_set<GroupElement> reflections;
    const auto& sys = t.system();
    for (std::size_t x = 0; x < t.size(); ++x) {
      const GroupElement& xe = t.element(x);
      const GroupElement& xinv = t.element(t.inverse(x));
      for (std::size_t i = 0; i < sys.rank(); ++i)
        reflections.insert(xe * generator_matrix(sys, i) * xinv);
    }
    reflections_.assign(reflections.begin(), reflections.end());
    out_.resize(t.size());
    for (std::size_t u = 0; u < t.size(); ++u)
      for (const auto& r : reflections_)
        if (auto v = t.find(t.element(u) * r); v && t.length(*v) > t.length(u))
          out_[u].push_back(*v);
    for (auto& adj : out_)
      std::sort(adj.begin(), adj.end());
  }

  std::size_t reflection_count() const noexcept { return reflections_.size(); }

  const std::vector<std::size_t>& successors(std::size_t u) const {
    return out_.at(u);
  }

  bool leq(std::size_t u, std::size_t v) const {
    return reachable_from(u)[v];
  }

  bool leq(const Word& v, const Word& w) const {
    return leq(table_->index_of(v), table_->index_of(w));
  }

private:
  const std::vector<bool>& reachable_from(std::size_t u) const {
    auto it = reach_.find(u);
    if (it != reach_.end())
      return it->second;
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::size_t> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : out_[x])
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    return reach_.emplace(u, std::move(seen)).first->second;
  }

  const CayleyTable* table_;
  std::vector<GroupElement> reflections_;
  std::vector<std::vector<std::size_t>> out_;
  mutable std::unordered_map<std::size_t, std::vector<bool>> reach_;
};

inline bool bruhat_leq_cover(const CayleyTable& t, const Word& v,
                             const Word& w) {
  return BruhatGraph(t).leq(v, w);
}

enum class Side { right, left };

/// Right (left) weak order: reachability along u -> u s_i (s_i u) steps
/// that increase length.
inline bool weak_leq(const CayleyTable& t, std::size_t u, std::size_t v,
                     Side side) {
  const std::size_t lv = t.length(v);
  std::vector<std::size_t> frontier{u};
  std::unordered_set<std::size_t> seen{u};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier) {
      if (x == v)
        return true;
      if (t.length(x) >= lv)
        continue;
      for (std::size_t i = 0; i < t.system().rank(); ++i) {
        std::size_t y = side == Side::right ? t.right(x, i) : t.left(x, i);
        if (y != CayleyTable::npos && t.length(y) > t.length(x) &&
            seen.insert(y).second)
          next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

inline bool weak_leq(const CayleyTable& t, const Word& v, const Word& w,
                     Side side) {
  return weak_leq(t, t.index_of(v), t.index_of(w), side);
}

} // namespace mutwb

#endif
