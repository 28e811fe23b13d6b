#ifndef MUTWB_IO_HPP
#define MUTWB_IO_HPP

// JSON and DOT forms of every artifact. Vertex and generator indices are
// 1-based in all external formats; node ids of graphs are 0-based positions
// in their node lists. Integers that fit in 64 bits are JSON numbers, larger
// ones are decimal strings; readers accept both.

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cluster.hpp"
#include "coxeter.hpp"
#include "cy3.hpp"
#include "error.hpp"
#include "exchange.hpp"
#include "laurent.hpp"
#include "tiltmonoid.hpp"

namespace mutwb::io {

using json = nlohmann::json;

namespace detail {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

inline std::size_t index_from_json(const json& j, std::size_t n,
                                   const char* what) {
  const long long v = j.get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > n)
    throw DomainError(std::string(what) + " index " + std::to_string(v) +
                      " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

} // namespace detail

inline json to_json(const Integer& x) {
  if (fits_int64(x))
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start ||
        s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (std::size_t i : w)
    out.push_back(i + 1);
  return out;
}

inline Word word_from_json(const json& j, std::size_t n) {
  return detail::guarded("word", [&] {
    Word w;
    for (const auto& x : j)
      w.push_back(detail::index_from_json(x, n, "generator"));
    return w;
  });
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix int_matrix_from_json(const json& j, std::size_t n) {
  return detail::guarded("matrix", [&] {
    if (!j.is_array() || j.size() != n)
      throw ParseError("matrix must have " + std::to_string(n) + " rows");
    IntMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!j[r].is_array() || j[r].size() != n)
        throw ParseError("matrix row " + std::to_string(r + 1) + " must have " +
                         std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c)
        m(r, c) = integer_from_json(j[r][c]);
    }
    return m;
  });
}

// Exchange matrices and quivers.

inline json to_json(const ExchangeMatrix& b) {
  return {{"n", b.size()}, {"b", to_json(b.matrix())}};
}

inline ExchangeMatrix exchange_matrix_from_json(const json& j) {
  return detail::guarded("exchange matrix", [&] {
    const auto n = j.at("n").get<std::size_t>();
    IntMatrix m = int_matrix_from_json(j.at("b"), n);
    try {
      return ExchangeMatrix(std::move(m));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  });
}

inline json to_json(const MultiQuiver& q) {
  json arrows = json::array();
  for (const auto& [a, m] : q.arrow_map())
    arrows.push_back({a.first + 1, a.second + 1, to_json(m)});
  return {{"n", q.size()}, {"arrows", std::move(arrows)}};
}

inline MultiQuiver multiquiver_from_json(const json& j) {
  return detail::guarded("quiver", [&] {
    const auto n = j.at("n").get<std::size_t>();
    MultiQuiver q(n);
    for (const auto& a : j.at("arrows")) {
      if (!a.is_array() || a.size() != 3)
        throw ParseError("arrow entries are [i, j, multiplicity]");
      const Integer m = integer_from_json(a[2]);
      if (m < 0)
        throw ParseError("arrow multiplicities must be non-negative");
      q.add_arrows(detail::index_from_json(a[0], n, "vertex"),
                   detail::index_from_json(a[1], n, "vertex"), m);
    }
    return q;
  });
}

/// Accepts either schema ({"n","b"} or {"n","arrows"}).
inline MultiQuiver any_quiver_from_json(const json& j) {
  if (j.is_object() && j.contains("b"))
    return to_multiquiver(exchange_matrix_from_json(j));
  return multiquiver_from_json(j);
}

// Laurent polynomials and seeds.

inline json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json::array({to_json(c), json(e)}));
  return out;
}

inline LaurentPoly laurent_from_json(const json& j, std::size_t nvars) {
  return detail::guarded("Laurent polynomial", [&] {
    LaurentPoly p(nvars);
    for (const auto& term : j) {
      if (!term.is_array() || term.size() != 2)
        throw ParseError("terms are [coefficient, [exponents]]");
      auto e = term[1].get<Exponent>();
      if (e.size() != nvars)
        throw ParseError("exponent vector must have length " +
                         std::to_string(nvars));
      p.add_term(e, integer_from_json(term[0]));
    }
    return p;
  });
}

inline json to_json(const Seed& s) {
  json cluster = json::array();
  for (const auto& x : s.cluster)
    cluster.push_back(to_json(x));
  return {{"matrix", to_json(s.matrix)}, {"cluster", std::move(cluster)}};
}

inline Seed seed_from_json(const json& j) {
  return detail::guarded("seed", [&] {
    Seed s{{}, exchange_matrix_from_json(j.at("matrix"))};
    for (const auto& x : j.at("cluster"))
      s.cluster.push_back(laurent_from_json(x, s.matrix.size()));
    try {
      validate(s);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
    return s;
  });
}

inline json to_json(const ExchangeGraph& g) {
  json nodes = json::array();
  for (std::size_t u = 0; u < g.nodes.size(); ++u)
    nodes.push_back({{"id", u}, {"depth", g.depth[u]}, {"seed", to_json(g.nodes[u])}});
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({e.from, e.to, e.direction + 1});
  json vars = json::array();
  for (const auto& x : g.cluster_variables)
    vars.push_back(to_json(x));
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"cluster_variables", std::move(vars)},
          {"distinct_clusters", g.distinct_clusters()}};
}

inline ExchangeGraph exchange_graph_from_json(const json& j) {
  return detail::guarded("exchange graph", [&] {
    ExchangeGraph g;
    for (const auto& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != g.nodes.size())
        throw ParseError("node ids must be consecutive from 0");
      g.nodes.push_back(seed_from_json(node.at("seed")));
      g.depth.push_back(node.at("depth").get<std::size_t>());
    }
    const std::size_t rank = g.nodes.empty() ? 0 : g.nodes.front().rank();
    for (const auto& e : j.at("edges")) {
      const auto from = e.at(0).get<std::size_t>();
      const auto to = e.at(1).get<std::size_t>();
      if (from >= g.nodes.size() || to >= g.nodes.size())
        throw ParseError("edge refers to a missing node");
      g.edges.push_back(
          {from, to, detail::index_from_json(e.at(2), rank, "direction")});
    }
    for (const auto& x : j.at("cluster_variables"))
      g.cluster_variables.push_back(laurent_from_json(x, rank));
    return g;
  });
}

// Diagrams, elements, tables.

inline json to_json(const ValuedDiagram& d) {
  json edges = json::array();
  for (const auto& [p, v] : d.edges())
    edges.push_back({p.first + 1, p.second + 1, v.a, v.b});
  json loops = json::array();
  for (std::size_t v : d.loops())
    loops.push_back(v + 1);
  return {{"n", d.size()}, {"edges", std::move(edges)},
          {"loops", std::move(loops)}};
}

inline ValuedDiagram diagram_from_json(const json& j) {
  return detail::guarded("diagram", [&] {
    const auto n = j.at("n").get<std::size_t>();
    ValuedDiagram d(n);
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || (e.size() != 4 && e.size() != 2))
        throw ParseError("edges are [i, j, a, b] (or [i, j] for plain)");
      Valuation v{};
      if (e.size() == 4)
        v = {e[2].get<unsigned>(), e[3].get<unsigned>()};
      d.add_edge(detail::index_from_json(e[0], n, "vertex"),
                 detail::index_from_json(e[1], n, "vertex"), v);
    }
    for (const auto& l : j.value("loops", json::array()))
      d.add_loop(detail::index_from_json(l, n, "vertex"));
    return d;
  });
}

inline json to_json(const TiltingState& t) {
  return {{"word", word_to_json(t.reduced_word())},
          {"matrix", to_json(t.element().mat)}};
}

/// Reads a state and checks that its word is reduced and evaluates to its
/// matrix.
inline TiltingState state_from_json(const json& j,
                                    std::shared_ptr<const CoxeterSystem> sys) {
  return detail::guarded("tilting state", [&] {
    const std::size_t n = sys->rank();
    Word w = word_from_json(j.at("word"), n);
    GroupElement g{int_matrix_from_json(j.at("matrix"), n)};
    if (evaluate(*sys, w) != g || descent_normal_form(*sys, g) != w)
      throw ParseError("state word is not the normal form of its matrix");
    return TiltingState(std::move(sys), std::move(g), std::move(w));
  });
}

inline json to_json(const CayleyTable& t) {
  json elements = json::array();
  for (const auto& node : t.nodes())
    elements.push_back({{"word", word_to_json(node.word)},
                        {"length", node.word.size()},
                        {"matrix", to_json(node.element.mat)}});
  return {{"diagram", to_json(t.system().diagram())},
          {"max_length", t.max_length()},
          {"elements", std::move(elements)}};
}

inline CayleyTable table_from_json(const json& j) {
  return detail::guarded("table", [&] {
    CoxeterSystem sys(diagram_from_json(j.at("diagram")));
    std::vector<CayleyTable::Node> nodes;
    for (const auto& e : j.at("elements"))
      nodes.push_back({{int_matrix_from_json(e.at("matrix"), sys.rank())},
                       word_from_json(e.at("word"), sys.rank())});
    return CayleyTable::restore(sys, j.at("max_length").get<std::size_t>(),
                                std::move(nodes));
  });
}

inline json to_json(const HasseQuiver& q) {
  json nodes = json::array();
  for (std::size_t u = 0; u < q.nodes.size(); ++u) {
    json node = to_json(q.nodes[u]);
    node["id"] = u;
    node["dangling"] = q.dangling[u];
    nodes.push_back(std::move(node));
  }
  json arrows = json::array();
  for (const auto& a : q.arrows)
    arrows.push_back({a.from, a.to, a.label + 1});
  return {{"diagram", to_json(q.system->diagram())},
          {"max_length", q.max_length},
          {"nodes", std::move(nodes)},
          {"arrows", std::move(arrows)}};
}

inline HasseQuiver hasse_from_json(const json& j) {
  return detail::guarded("Hasse quiver", [&] {
    HasseQuiver q;
    q.system = std::make_shared<const CoxeterSystem>(
        diagram_from_json(j.at("diagram")));
    q.max_length = j.at("max_length").get<std::size_t>();
    for (const auto& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != q.nodes.size())
        throw ParseError("node ids must be consecutive from 0");
      q.nodes.push_back(state_from_json(node, q.system));
      q.dangling.push_back(node.at("dangling").get<std::size_t>());
    }
    for (const auto& a : j.at("arrows")) {
      const auto from = a.at(0).get<std::size_t>();
      const auto to = a.at(1).get<std::size_t>();
      if (from >= q.nodes.size() || to >= q.nodes.size())
        throw ParseError("arrow refers to a missing node");
      q.arrows.push_back(
          {from, to,
           detail::index_from_json(a.at(2), q.system->rank(), "generator")});
    }
    return q;
  });
}

// Triples and trees.

inline json to_json(const MarkovTriple& t) {
  return {to_json(t[0]), to_json(t[1]), to_json(t[2])};
}

inline MarkovTriple triple_from_json(const json& j) {
  return detail::guarded("triple", [&] {
    if (!j.is_array() || j.size() != 3)
      throw ParseError("a triple is [a, b, c]");
    return MarkovTriple(integer_from_json(j[0]), integer_from_json(j[1]),
                        integer_from_json(j[2]));
  });
}

inline json to_json(const MarkovTree& t) {
  json nodes = json::array();
  for (std::size_t u = 0; u < t.nodes.size(); ++u) {
    const auto& n = t.nodes[u];
    nodes.push_back(
        {{"id", u},
         {"triple", to_json(n.triple)},
         {"depth", n.depth},
         {"parent", n.parent ? json(*n.parent) : json(nullptr)},
         {"position", n.position ? json(*n.position + 1) : json(nullptr)}});
  }
  return {{"nodes", std::move(nodes)}};
}

inline MarkovTree markov_tree_from_json(const json& j) {
  return detail::guarded("Markov tree", [&] {
    MarkovTree t;
    for (const auto& node : j.at("nodes")) {
      if (node.at("id").get<std::size_t>() != t.nodes.size())
        throw ParseError("node ids must be consecutive from 0");
      MarkovTree::Node n;
      n.triple = triple_from_json(node.at("triple"));
      n.depth = node.at("depth").get<std::size_t>();
      if (!node.at("parent").is_null()) {
        n.parent = node.at("parent").get<std::size_t>();
        if (*n.parent >= t.nodes.size())
          throw ParseError("parent must precede its child");
      }
      if (!node.at("position").is_null())
        n.position = detail::index_from_json(node.at("position"), 3, "position");
      t.nodes.push_back(std::move(n));
    }
    return t;
  });
}

// DOT.

inline std::string to_dot(const MultiQuiver& q,
                          const std::string& name = "quiver") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < q.size(); ++v)
    os << "  " << v + 1 << " [label=\"" << v + 1 << "\"];\n";
  for (const auto& [a, m] : q.arrow_map())
    os << "  " << a.first + 1 << " -> " << a.second + 1 << " [label=\"" << m
       << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const ExchangeMatrix& b) {
  return to_dot(to_multiquiver(b));
}

inline std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    std::string label;
    for (const auto& x : g.nodes[u].cluster)
      label += (label.empty() ? "" : "\\n") + x.to_string();
    os << "  n" << u << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.direction + 1
       << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const HasseQuiver& q) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t u = 0; u < q.nodes.size(); ++u) {
    std::string label;
    for (std::size_t i : q.nodes[u].reduced_word())
      label += "I" + std::to_string(i + 1);
    os << "  n" << u << " [label=\"" << (label.empty() ? "Lambda" : label)
       << "\"];\n";
  }
  for (const auto& a : q.arrows)
    os << "  n" << a.from << " -> n" << a.to << " [label=\"" << a.label + 1
       << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const MarkovTree& t) {
  std::ostringstream os;
  os << "graph markov {\n";
  for (std::size_t u = 0; u < t.nodes.size(); ++u) {
    const auto& x = t.nodes[u].triple;
    os << "  n" << u << " [label=\"" << x[0] << "," << x[1] << "," << x[2]
       << "\"];\n";
  }
  for (std::size_t u = 0; u < t.nodes.size(); ++u)
    if (t.nodes[u].parent)
      os << "  n" << *t.nodes[u].parent << " -- n" << u << " [label=\""
         << *t.nodes[u].position + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace mutwb::io

#endif
