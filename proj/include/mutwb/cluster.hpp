#ifndef MUTWB_CLUSTER_HPP
#define MUTWB_CLUSTER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "exchange.hpp"
#include "laurent.hpp"

namespace mutwb {

/// A cluster of n Laurent polynomials in the initial variables together with
/// an n x n exchange matrix.
struct Seed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  std::size_t rank() const noexcept { return cluster.size(); }

  friend bool operator==(const Seed&, const Seed&) = default;

  std::size_t hash() const {
    std::size_t seed = matrix.hash();
    for (const auto& x : cluster)
      hash_combine(seed, x.hash());
    return seed;
  }
};

/// Cluster (x_1, ..., x_n) together with `b`.
inline Seed initial_seed(const ExchangeMatrix& b) {
  Seed s{{}, b};
  s.cluster.reserve(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    s.cluster.push_back(LaurentPoly::variable(b.size(), i));
  return s;
}

/// Throws DomainError unless the cluster length matches the matrix and every
/// entry is nonzero in the right ring.
inline void validate(const Seed& s) {
  if (s.cluster.size() != s.matrix.size())
    throw DomainError("cluster length differs from matrix dimension");
  for (const auto& x : s.cluster) {
    if (x.nvars() != s.rank())
      throw DomainError("cluster variable in a ring of the wrong rank");
    if (x.is_zero())
      throw DomainError("cluster variables must be nonzero");
  }
}

/// Clusters are sets; this compares them as multisets, ignoring labels and
/// the exchange matrix.
inline bool same_cluster_set(const Seed& a, const Seed& b) {
  auto x = a.cluster;
  auto y = b.cluster;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace detail {

inline unsigned long small_exponent(const Integer& e) {
  if (e > 1'000'000)
    throw ResourceLimit("exchange exponent " + e.str() + " is too large");
  return e.convert_to<unsigned long>();
}

} // namespace detail

/// Seed mutation at k. The new variable is
///   x_k' = (prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}) / x_k
/// over the current cluster, computed by exact division. Throws NotDivisible
/// if the quotient is not a Laurent polynomial.
inline Seed mutate_seed(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  detail::check_vertex(k, n);
  LaurentPoly positive = LaurentPoly::constant(n, 1);
  LaurentPoly negative = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& bik = s.matrix(i, k);
    if (bik > 0)
      positive = positive * pow(s.cluster[i], detail::small_exponent(bik));
    else if (bik < 0)
      negative = negative * pow(s.cluster[i], detail::small_exponent(-bik));
  }
  Seed out{s.cluster, mutate(s.matrix, k)};
  out.cluster[k] = exact_divide(positive + negative, s.cluster[k]);
  return out;
}

inline std::string format_word(const std::vector<std::size_t>& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i)
    out += (i ? " " : "") + std::to_string(word[i] + 1);
  return out + ")";
}

/// Mutates along `word`, left to right. A failed division is reported as a
/// Laurent-phenomenon violation naming the full word.
inline Seed mutate_seed(Seed s, const std::vector<std::size_t>& word) {
  for (std::size_t step = 0; step < word.size(); ++step) {
    try {
      s = mutate_seed(s, word[step]);
    } catch (const NotDivisible&) {
      throw NotDivisible("Laurent phenomenon violated: exchange division "
                         "failed at step " +
                         std::to_string(step + 1) + " of mutation word " +
                         format_word(word));
    }
  }
  return s;
}

/// Labeled exchange graph explored by breadth-first search.
struct ExchangeGraph {
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t direction;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::vector<Seed> nodes;
  std::vector<std::size_t> depth;
  std::vector<Edge> edges;
  /// Every cluster variable met, sorted and without repeats.
  std::vector<LaurentPoly> cluster_variables;

  /// Number of distinct clusters counted as unordered sets.
  std::size_t distinct_clusters() const {
    std::set<std::vector<LaurentPoly>> seen;
    for (const auto& s : nodes) {
      auto c = s.cluster;
      std::sort(c.begin(), c.end());
      seen.insert(std::move(c));
    }
    return seen.size();
  }

  friend bool operator==(const ExchangeGraph&, const ExchangeGraph&) = default;
};

/// Breadth-first closure under mutation in all directions. Nodes are
/// deduplicated by exact labeled equality (cluster sequence and matrix).
/// Each undirected edge is recorded once.
inline ExchangeGraph exchange_closure(const Seed& start, std::size_t max_depth,
                                      std::size_t node_cap = 100000) {
  struct SeedHash {
    std::size_t operator()(const Seed& s) const { return s.hash(); }
  };
  ExchangeGraph g;
  std::unordered_map<Seed, std::size_t, SeedHash> index;
  std::set<LaurentPoly> variables(start.cluster.begin(), start.cluster.end());

  g.nodes.push_back(start);
  g.depth.push_back(0);
  index.emplace(start, 0);

  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    if (g.depth[u] >= max_depth)
      continue;
    for (std::size_t k = 0; k < start.rank(); ++k) {
      Seed next = mutate_seed(g.nodes[u], k);
      auto it = index.find(next);
      if (it == index.end()) {
        if (g.nodes.size() >= node_cap)
          throw ResourceLimit("exchange closure exceeded node cap of " +
                              std::to_string(node_cap));
        const std::size_t v = g.nodes.size();
        variables.insert(next.cluster[k]);
        index.emplace(next, v);
        g.nodes.push_back(std::move(next));
        g.depth.push_back(g.depth[u] + 1);
        g.edges.push_back({u, v, k});
      } else if (it->second > u) {
        g.edges.push_back({u, it->second, k});
      }
    }
  }
  g.cluster_variables.assign(variables.begin(), variables.end());
  return g;
}

} // namespace mutwb

#endif
