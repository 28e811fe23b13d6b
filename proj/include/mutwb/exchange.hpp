#ifndef MUTWB_EXCHANGE_HPP
#define MUTWB_EXCHANGE_HPP

// Quivers, skew-symmetric exchange matrices and Fomin-Zelevinsky mutation.
//
// All indices in this header are 0-based. The JSON/CLI layer converts to the
// 1-based numbering used in printed output.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "matrix.hpp"

namespace mutwb {

namespace detail {

inline void check_vertex(std::size_t k, std::size_t n) {
  if (k >= n)
    throw DomainError("vertex index " + std::to_string(k + 1) +
                      " out of range 1.." + std::to_string(n));
}

} // namespace detail

/// Skew-symmetric integer matrix; b(i,j) > 0 counts arrows i -> j.
///
/// The representable quivers have neither loops nor 2-cycles. Entries can
/// only be written pairwise through set(), so skew-symmetry always holds.
class ExchangeMatrix {
public:
  ExchangeMatrix() = default;

  explicit ExchangeMatrix(std::size_t n) : b_(n) {}

  /// Throws DomainError unless `b` is skew-symmetric.
  explicit ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
    const std::size_t n = b_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (b_(i, j) != -b_(j, i))
          throw DomainError("matrix is not skew-symmetric at (" +
                            std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
  }

  std::size_t size() const noexcept { return b_.size(); }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return b_(i, j);
  }

  /// Sets b(i,j) = value and b(j,i) = -value.
  void set(std::size_t i, std::size_t j, const Integer& value) {
    detail::check_vertex(i, size());
    detail::check_vertex(j, size());
    if (i == j) {
      if (value != 0)
        throw DomainError("exchange matrices carry no loops");
      return;
    }
    b_(i, j) = value;
    b_(j, i) = -value;
  }

  const IntMatrix& matrix() const noexcept { return b_; }

  friend bool operator==(const ExchangeMatrix&,
                         const ExchangeMatrix&) = default;

  std::size_t hash() const { return b_.hash(); }

private:
  IntMatrix b_;
};

/// Fomin-Zelevinsky matrix mutation at vertex k:
///   b'_{ij} = -b_{ij}                                  if k in {i, j}
///   b'_{ij} = b_{ij} + (|b_ik| b_kj + b_ik |b_kj|) / 2  otherwise.
inline ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.size();
  detail::check_vertex(k, n);
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      const Integer& bik = b(i, k);
      const Integer& bkj = b(k, j);
      out(i, j) = b(i, j) + (abs(bik) * bkj + bik * abs(bkj)) / 2;
    }
  return ExchangeMatrix(std::move(out));
}

/// The same mutation written out case by case on the signs of b_ik and b_kj
/// (arrows at k reverse; a path i -> k -> j adds b_ik b_kj arrows i -> j; the
/// opposite path subtracts them; everything else is unchanged). Kept as a
/// separate route so the two forms can be checked against each other.
inline ExchangeMatrix mutate_sign_split(const ExchangeMatrix& b,
                                        std::size_t k) {
  const std::size_t n = b.size();
  detail::check_vertex(k, n);
  IntMatrix out = b.matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else if (b(i, k) > 0 && b(k, j) > 0) {
        out(i, j) = b(i, j) + b(i, k) * b(k, j);
      } else if (b(i, k) < 0 && b(k, j) < 0) {
        out(i, j) = b(i, j) - b(i, k) * b(k, j);
      }
    }
  return ExchangeMatrix(std::move(out));
}

/// Applies mutations left to right.
inline ExchangeMatrix mutate(ExchangeMatrix b,
                             const std::vector<std::size_t>& word) {
  for (std::size_t k : word)
    b = mutate(b, k);
  return b;
}

/// Finite quiver with arrow multiplicities; loops and 2-cycles allowed.
class MultiQuiver {
public:
  using Arrow = std::pair<std::size_t, std::size_t>;

  MultiQuiver() = default;
  explicit MultiQuiver(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }

  Integer arrows(std::size_t i, std::size_t j) const {
    auto it = arrows_.find({i, j});
    return it == arrows_.end() ? Integer(0) : it->second;
  }

  void add_arrows(std::size_t i, std::size_t j, const Integer& count) {
    set_arrows(i, j, arrows(i, j) + count);
  }

  void set_arrows(std::size_t i, std::size_t j, const Integer& count) {
    detail::check_vertex(i, n_);
    detail::check_vertex(j, n_);
    if (count < 0)
      throw DomainError("arrow multiplicities must be non-negative");
    if (count == 0)
      arrows_.erase({i, j});
    else
      arrows_[{i, j}] = count;
  }

  /// Nonzero multiplicities in (source, target) order.
  const std::map<Arrow, Integer>& arrow_map() const noexcept {
    return arrows_;
  }

  std::vector<std::size_t> loops() const {
    std::vector<std::size_t> out;
    for (const auto& [a, m] : arrows_)
      if (a.first == a.second)
        out.push_back(a.first);
    return out;
  }

  /// Unordered pairs (i < j) with arrows in both directions.
  std::vector<Arrow> two_cycles() const {
    std::vector<Arrow> out;
    for (const auto& [a, m] : arrows_)
      if (a.first < a.second && arrows_.count({a.second, a.first}))
        out.push_back(a);
    return out;
  }

  friend bool operator==(const MultiQuiver&, const MultiQuiver&) = default;

private:
  std::size_t n_ = 0;
  std::map<Arrow, Integer> arrows_;
};

inline MultiQuiver to_multiquiver(const ExchangeMatrix& b) {
  MultiQuiver q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b(i, j) > 0)
        q.set_arrows(i, j, b(i, j));
  return q;
}

/// Throws DomainError naming every loop and 2-cycle when `q` is not the
/// quiver of an exchange matrix.
inline ExchangeMatrix from_multiquiver(const MultiQuiver& q) {
  std::string problems;
  for (std::size_t v : q.loops())
    problems += (problems.empty() ? "" : ", ") + std::string("loop at ") +
                std::to_string(v + 1);
  for (const auto& [i, j] : q.two_cycles())
    problems += (problems.empty() ? "" : ", ") + std::string("2-cycle at (") +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (!problems.empty())
    throw DomainError(problems);
  ExchangeMatrix b(q.size());
  for (const auto& [a, m] : q.arrow_map())
    b.set(a.first, a.second, m);
  return b;
}

/// Cancels opposing arrows pairwise; loops are left alone.
inline MultiQuiver remove_two_cycles(const MultiQuiver& q) {
  MultiQuiver out(q.size());
  for (const auto& [a, m] : q.arrow_map()) {
    if (a.first == a.second) {
      out.set_arrows(a.first, a.second, m);
      continue;
    }
    const Integer back = q.arrows(a.second, a.first);
    if (m > back)
      out.set_arrows(a.first, a.second, m - back);
  }
  return out;
}

/// Result of mutating a quiver that may carry 2-cycles.
struct QuiverMutation {
  ExchangeMatrix result;
  /// 2-cycles (i < j) that had to be cancelled before mutating.
  std::vector<MultiQuiver::Arrow> cancelled_two_cycles;
};

/// Cancels 2-cycles, records them, then mutates along `word`.
inline QuiverMutation mutate(const MultiQuiver& q,
                             const std::vector<std::size_t>& word) {
  QuiverMutation out;
  out.cancelled_two_cycles = q.two_cycles();
  out.result = mutate(from_multiquiver(remove_two_cycles(q)), word);
  return out;
}

/// McKay quiver of the cyclic group of the given order acting with the
/// given weights: vertices Z/order, and for each vertex i and weight w one
/// arrow i -> i + w. Multiplicities accumulate.
inline MultiQuiver mckay_cyclic(std::size_t order,
                                const std::vector<long long>& weights) {
  if (order == 0)
    throw DomainError("group order must be positive");
  if (weights.empty())
    throw DomainError("weight list must be nonempty");
  const auto r = static_cast<long long>(order);
  MultiQuiver q(order);
  for (std::size_t i = 0; i < order; ++i)
    for (long long w : weights) {
      const long long shift = ((w % r) + r) % r;
      q.add_arrows(i, (i + static_cast<std::size_t>(shift)) % order, 1);
    }
  return q;
}

/// Relabels vertices: out(p[i], p[j]) = b(i, j).
inline ExchangeMatrix relabel(const ExchangeMatrix& b,
                              const std::vector<std::size_t>& perm) {
  const std::size_t n = b.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(perm[i], perm[j]) = b(i, j);
  return ExchangeMatrix(std::move(out));
}

/// Lexicographically smallest relabeling, by brute force over all n!
/// permutations. Only for n <= 8.
inline ExchangeMatrix canonical_form(const ExchangeMatrix& b) {
  const std::size_t n = b.size();
  if (n > 8)
    throw ResourceLimit("canonical_form is limited to 8 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto flat = [n](const ExchangeMatrix& m) {
    std::vector<Integer> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        v.push_back(m(i, j));
    return v;
  };
  ExchangeMatrix best = b;
  auto best_key = flat(best);
  do {
    ExchangeMatrix candidate = relabel(b, perm);
    auto key = flat(candidate);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace mutwb

template <>
struct std::hash<mutwb::ExchangeMatrix> {
  std::size_t operator()(const mutwb::ExchangeMatrix& b) const {
    return b.hash();
  }
};

#endif
