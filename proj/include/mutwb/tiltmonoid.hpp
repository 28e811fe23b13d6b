#ifndef MUTWB_TILTMONOID_HPP
#define MUTWB_TILTMONOID_HPP

// Combinatorial model of the tilting modules of projective dimension at most
// one over a 2-CY algebra. The tilting modules form a monoid of ideals on
// which the Weyl group of the quiver's diagram acts simply transitively, so a
// tilting module is modeled by the group element w with T = Lambda^w,
// together with one reduced word w = s_{a_1} ... s_{a_k} (T = I_{a_1} ...
// I_{a_k}). Mutation at i is right multiplication by s_i. Whether it is the
// ideal product T I_i (an arrow T -> T^{s_i} of the Hasse quiver) or its
// inverse is decided by whether the length goes up or down.

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "coxeter.hpp"

namespace mutwb {

class TiltingState {
public:
  /// The state Lambda itself.
  explicit TiltingState(std::shared_ptr<const CoxeterSystem> sys)
      : sys_(std::move(sys)),
        element_(GroupElement::identity(sys_->rank())) {}

  /// State of an element given with its smallest reduced word.
  TiltingState(std::shared_ptr<const CoxeterSystem> sys, GroupElement element,
               Word reduced_word)
      : sys_(std::move(sys)), element_(std::move(element)),
        word_(std::move(reduced_word)) {}

  const CoxeterSystem& system() const noexcept { return *sys_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const noexcept {
    return sys_;
  }
  const GroupElement& element() const noexcept { return element_; }
  const Word& reduced_word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  friend bool operator==(const TiltingState& a, const TiltingState& b) {
    return a.element_ == b.element_ && a.word_ == b.word_;
  }

private:
  std::shared_ptr<const CoxeterSystem> sys_;
  GroupElement element_;
  Word word_;
};

enum class Direction { up, down };

struct Mutation {
  TiltingState state;
  Direction direction;
};

/// T -> T^{s_i}. Direction is up when i is not a right descent of w (the
/// length grows by one: T^{s_i} = T I_i) and down otherwise. Right descents
/// are read off the root w(alpha_i), which is row i of the matrix of w^{-1}.
inline Mutation apply_generator(const TiltingState& t, std::size_t i) {
  const CoxeterSystem& sys = t.system();
  const GroupElement inverse = evaluate(sys, reversed(t.reduced_word()));
  const bool down = is_left_descent(inverse, i);
  GroupElement next = t.element() * generator_matrix(sys, i);
  Word word = descent_normal_form(sys, next);
  return {TiltingState(t.system_ptr(), std::move(next), std::move(word)),
          down ? Direction::down : Direction::up};
}

/// Applies generators left to right, returning every intermediate step.
inline std::vector<Mutation> walk(const TiltingState& start, const Word& w) {
  std::vector<Mutation> steps;
  steps.reserve(w.size());
  const TiltingState* current = &start;
  for (std::size_t i : w) {
    steps.push_back(apply_generator(*current, i));
    current = &steps.back().state;
  }
  return steps;
}

/// Matrix of [Lambda^w (x) -] on K_0 in the basis [P_1], ..., [P_n]. This is
/// the element's own matrix; for w = s_i, column i is [P_i] + sum_j k_ij [P_j].
inline IntMatrix k0_class_matrix(const TiltingState& t) {
  return t.element().mat;
}

/// State of the product I_{a_1} ... I_{a_m}, with its reduced word taken
/// from the table. Throws DepthExceeded if the element is outside it.
inline TiltingState word_to_state(const CayleyTable& table,
                                  std::shared_ptr<const CoxeterSystem> sys,
                                  const Word& w) {
  const std::size_t u = table.index_of(evaluate(*sys, w));
  return TiltingState(std::move(sys), table.element(u), table.word(u));
}

/// Hasse quiver of the tilting modules truncated at a length bound.
struct HasseQuiver {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    std::size_t label;
    friend bool operator==(const Arrow&, const Arrow&) = default;
  };

  std::shared_ptr<const CoxeterSystem> system;
  std::size_t max_length = 0;
  std::vector<TiltingState> nodes;
  std::vector<Arrow> arrows;
  /// Per node, the number of neighbours lying beyond the bound.
  std::vector<std::size_t> dangling;

  std::size_t in_degree(std::size_t u) const {
    std::size_t d = 0;
    for (const auto& a : arrows)
      d += a.to == u;
    return d;
  }
  std::size_t out_degree(std::size_t u) const {
    std::size_t d = 0;
    for (const auto& a : arrows)
      d += a.from == u;
    return d;
  }
};

/// Nodes are the states of length <= max_length (node 0 is Lambda); arrows
/// go from T to T^{s_i} when the length increases, labeled i. Every node has
/// exactly n neighbours in the full quiver; those beyond the bound are
/// counted in `dangling`.
inline HasseQuiver hasse_quiver(const CoxeterSystem& sys,
                                std::size_t max_length,
                                std::size_t node_cap = 100000) {
  auto shared = std::make_shared<const CoxeterSystem>(sys);
  const CayleyTable table(sys, max_length, node_cap);
  HasseQuiver q;
  q.system = shared;
  q.max_length = max_length;
  q.dangling.assign(table.size(), 0);
  q.nodes.reserve(table.size());
  for (std::size_t u = 0; u < table.size(); ++u) {
    q.nodes.emplace_back(shared, table.element(u), table.word(u));
    for (std::size_t i = 0; i < sys.rank(); ++i) {
      const std::size_t v = table.right(u, i);
      if (v == CayleyTable::npos)
        ++q.dangling[u];
      else if (table.length(v) > table.length(u))
        q.arrows.push_back({u, v, i});
    }
  }
  return q;
}

} // namespace mutwb

#endif
