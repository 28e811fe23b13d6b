#ifndef MUTWB_CY3_HPP
#define MUTWB_CY3_HPP

// Arrow-count triples of cyclic 3-vertex quivers: the graded mutation
// recursion and the Markov tree grown from the McKay triangle (3,3,3).
//
// Position k of a triple holds the number of arrows on the edge opposite
// vertex k, so mutating at vertex k rewrites position k only.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exchange.hpp"
#include "integer.hpp"

namespace mutwb {

/// Ordered (positional) triple of arrow counts.
struct MarkovTriple {
  std::array<Integer, 3> b{1, 1, 1};

  MarkovTriple() = default;
  MarkovTriple(Integer x, Integer y, Integer z)
      : b{std::move(x), std::move(y), std::move(z)} {}

  const Integer& operator[](std::size_t k) const { return b.at(k); }

  bool positive() const {
    return b[0] > 0 && b[1] > 0 && b[2] > 0;
  }

  /// a^2 + b^2 + c^2 == abc
  bool satisfies_markov() const {
    return b[0] * b[0] + b[1] * b[1] + b[2] * b[2] == b[0] * b[1] * b[2];
  }

  /// Sorted copy; the unordered view of the triple.
  std::array<Integer, 3> unordered() const {
    auto s = b;
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
};

struct GradedStep {
  MarkovTriple triple;
  /// False once an entry is no longer positive: the recursion has left the
  /// regime of cyclic quivers.
  bool positive;
};

/// b'_k = b_{k+1} b_{k+2} - b_k, other positions unchanged (indices mod 3).
inline GradedStep graded_mutation(const MarkovTriple& t, std::size_t k) {
  if (k > 2)
    throw DomainError("triple position " + std::to_string(k + 1) +
                      " out of range 1..3");
  MarkovTriple out = t;
  out.b[k] = t.b[(k + 1) % 3] * t.b[(k + 2) % 3] - t.b[k];
  return {out, out.positive()};
}

/// positive: 1 -> 2 -> 3 -> 1; negative: the reverse cycle.
enum class Orientation { positive, negative };

inline Orientation flip(Orientation o) {
  return o == Orientation::positive ? Orientation::negative
                                    : Orientation::positive;
}

/// Exchange matrix of the cyclic triangle carrying `t`.
inline ExchangeMatrix triple_to_matrix(const MarkovTriple& t, Orientation o) {
  const Integer sign = o == Orientation::positive ? 1 : -1;
  ExchangeMatrix m(3);
  m.set(0, 1, sign * t[2]);
  m.set(1, 2, sign * t[0]);
  m.set(2, 0, sign * t[1]);
  return m;
}

/// Inverse of triple_to_matrix; throws DomainError unless the three edges
/// are nonzero and oriented around one cycle.
inline std::pair<MarkovTriple, Orientation>
matrix_to_triple(const ExchangeMatrix& m) {
  if (m.size() != 3)
    throw DomainError("matrix is not cyclic: expected 3 vertices");
  const Integer& e01 = m(0, 1);
  const Integer& e12 = m(1, 2);
  const Integer& e20 = m(2, 0);
  if (e01 > 0 && e12 > 0 && e20 > 0)
    return {MarkovTriple(e12, e20, e01), Orientation::positive};
  if (e01 < 0 && e12 < 0 && e20 < 0)
    return {MarkovTriple(-e12, -e20, -e01), Orientation::negative};
  throw DomainError("matrix is not cyclic");
}

struct MarkovTree {
  struct Node {
    MarkovTriple triple;
    std::optional<std::size_t> parent;
    /// Position mutated to reach this node from its parent.
    std::optional<std::size_t> position;
    std::size_t depth = 0;
  };

  std::vector<Node> nodes;

  /// Sorted set of unordered triples present.
  std::set<std::array<Integer, 3>> unordered_labels() const {
    std::set<std::array<Integer, 3>> out;
    for (const auto& n : nodes)
      out.insert(n.triple.unordered());
    return out;
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = nodes.at(u).parent ? 1 : 0;
    for (const auto& n : nodes)
      d += n.parent == u;
    return d;
  }
};

/// Tree of triples reached by graded mutation. The root has three children;
/// every other node has two, since mutating again at the position that
/// produced it returns to its parent. With `dedup`, a node is dropped when
/// its unordered triple was already seen.
inline MarkovTree markov_tree(const MarkovTriple& root, std::size_t depth,
                              bool dedup = false,
                              std::size_t node_cap = 100000) {
  if (!root.positive() || !root.satisfies_markov())
    throw DomainError("root does not satisfy the Markov equation");
  MarkovTree tree;
  tree.nodes.push_back({root, std::nullopt, std::nullopt, 0});
  std::set<std::array<Integer, 3>> seen{root.unordered()};
  for (std::size_t u = 0; u < tree.nodes.size(); ++u) {
    if (tree.nodes[u].depth >= depth)
      continue;
    for (std::size_t k = 0; k < 3; ++k) {
      if (tree.nodes[u].position == k)
        continue;
      MarkovTriple child = graded_mutation(tree.nodes[u].triple, k).triple;
      if (dedup && !seen.insert(child.unordered()).second)
        continue;
      if (tree.nodes.size() >= node_cap)
        throw ResourceLimit("Markov tree exceeded node cap of " +
                            std::to_string(node_cap));
      tree.nodes.push_back({std::move(child), u, k, tree.nodes[u].depth + 1});
    }
  }
  return tree;
}

} // namespace mutwb

#endif
