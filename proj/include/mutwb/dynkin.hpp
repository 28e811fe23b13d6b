#ifndef MUTWB_DYNKIN_HPP
#define MUTWB_DYNKIN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coxeter.hpp"

namespace mutwb {

struct NamedDiagram {
  std::string name;
  ValuedDiagram diagram;
};

namespace detail {

inline ValuedDiagram path(std::size_t n) {
  ValuedDiagram d(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    d.add_edge(i, i + 1);
  return d;
}

inline std::string valuation_tag(Valuation v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

} // namespace detail

/// Generalized extended Dynkin diagrams with 2..max_vertices vertices whose
/// edge types the Coxeter table covers:
///   (i)   extended Dynkin diagrams: cycles A~, the (2,2) edge A~1, D~4, and
///         the valued families B~/C~/BC~ (path ends valued (1,2) or (2,1)),
///         G~ and F~ in both valuation directions;
///   (ii)  a path with a loop at each end;
///   (iii) a path with a loop at the start and a (1,2)/(2,1) edge at the end;
///   (iv)  a path with a loop at the start ending in a fork.
/// Vertices are numbered along the path. Mirror images are not removed.
inline std::vector<NamedDiagram>
generalized_extended_dynkin_diagrams(std::size_t max_vertices) {
  std::vector<NamedDiagram> out;
  const Valuation half[] = {{1, 2}, {2, 1}};
  auto push = [&](std::string name, ValuedDiagram d) {
    if (d.size() >= 2 && d.size() <= max_vertices)
      out.push_back({std::move(name), std::move(d)});
  };

  // (i)
  push("A~1", ValuedDiagram(2).add_edge(0, 1, {2, 2}));
  for (std::size_t n = 3; n <= max_vertices; ++n) {
    ValuedDiagram d = detail::path(n);
    d.add_edge(n - 1, 0);
    push("A~" + std::to_string(n - 1), d);
  }
  if (max_vertices >= 5) {
    ValuedDiagram d(5);
    for (std::size_t leaf = 1; leaf < 5; ++leaf)
      d.add_edge(0, leaf);
    push("D~4", d);
  }
  for (std::size_t n = 4; n <= max_vertices; ++n)
    for (Valuation v : half) {
      // fork 0,1 -> 2, path 2 .. n-2, valued edge n-2 -- n-1
      ValuedDiagram d(n);
      d.add_edge(0, 2).add_edge(1, 2);
      for (std::size_t i = 2; i + 2 < n; ++i)
        d.add_edge(i, i + 1);
      d.add_edge(n - 2, n - 1, v);
      push("fork-" + detail::valuation_tag(v) + "~" + std::to_string(n - 1),
           d);
    }
  for (std::size_t n = 3; n <= max_vertices; ++n)
    for (Valuation v1 : half)
      for (Valuation v2 : half) {
        ValuedDiagram d(n);
        d.add_edge(0, 1, v1);
        for (std::size_t i = 1; i + 2 < n; ++i)
          d.add_edge(i, i + 1);
        d.add_edge(n - 2, n - 1, v2);
        push(detail::valuation_tag(v1) + "-path-" +
                 detail::valuation_tag(v2) + "~" + std::to_string(n - 1),
             d);
      }
  for (Valuation v : {Valuation{1, 3}, Valuation{3, 1}}) {
    push("G~2" + detail::valuation_tag(v),
         ValuedDiagram(3).add_edge(0, 1).add_edge(1, 2, v));
  }
  for (Valuation v : half) {
    ValuedDiagram d(5);
    d.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3, v).add_edge(3, 4);
    push("F~4" + detail::valuation_tag(v), d);
  }

  // (ii)
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    ValuedDiagram d = detail::path(n);
    d.add_loop(0).add_loop(n - 1);
    push("loop-path-loop" + std::to_string(n), d);
  }
  // (iii)
  for (std::size_t n = 2; n <= max_vertices; ++n)
    for (Valuation v : half) {
      ValuedDiagram d(n);
      for (std::size_t i = 0; i + 2 < n; ++i)
        d.add_edge(i, i + 1);
      d.add_loop(0).add_edge(n - 2, n - 1, v);
      push("loop-path-" + detail::valuation_tag(v) + std::to_string(n), d);
    }
  // (iv)
  for (std::size_t n = 3; n <= max_vertices; ++n) {
    ValuedDiagram d(n);
    for (std::size_t i = 0; i + 3 < n; ++i)
      d.add_edge(i, i + 1);
    d.add_edge(n - 3, n - 2).add_edge(n - 3, n - 1).add_loop(0);
    push("loop-path-fork" + std::to_string(n), d);
  }
  return out;
}

/// Plain triangle: the affine Weyl group of type A~2.
inline ValuedDiagram affine_a2() {
  return ValuedDiagram(3).add_edge(0, 1).add_edge(1, 2).add_edge(2, 0);
}

/// Two vertices joined by a (2,2) edge.
inline ValuedDiagram affine_a1() {
  return ValuedDiagram(2).add_edge(0, 1, {2, 2});
}

} // namespace mutwb

#endif
