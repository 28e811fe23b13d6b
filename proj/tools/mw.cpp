// mw: command-line front end for the mutation workbench.
//
// Machine-readable output goes to stdout, messages to stderr. Exit codes:
// 0 ok, 2 malformed input, 3 domain precondition, 4 resource cap.

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mutwb/mutwb.hpp"

namespace {

using namespace mutwb;
using io::json;

constexpr std::size_t default_cap = 100000;

enum Exit { ok = 0, parse_failure = 2, domain_failure = 3, resource_failure = 4 };

std::string slurp(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

/// 1-based CLI indices to 0-based, checked against the rank.
Word to_word(const std::vector<long long>& raw, std::size_t n) {
  Word w;
  for (long long v : raw) {
    if (v < 1 || static_cast<unsigned long long>(v) > n)
      throw DomainError("vertex index " + std::to_string(v) +
                        " out of range 1.." + std::to_string(n));
    w.push_back(static_cast<std::size_t>(v - 1));
  }
  return w;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

/// Shared by subcommands that persist their result.
struct Output {
  bool dot = false;
  std::string store;

  template <typename T>
  void save(const T& value) const {
    if (store.empty())
      return;
    SessionStore s(SessionStore::default_path());
    s.put(store, value);
    s.save();
    std::cerr << "stored " << ArtifactTraits<T>::name << " as \"" << store
              << "\" in " << s.path().string() << "\n";
  }

  template <typename T>
  void print(const T& value) const {
    if (dot)
      std::cout << io::to_dot(value);
    else
      emit(io::to_json(value));
    save(value);
  }

  void add_to(CLI::App* cmd, bool with_dot = true) {
    if (with_dot)
      cmd->add_flag("--dot", dot, "Emit DOT instead of JSON");
    cmd->add_option("--store", store, "Save the result under this name");
  }
};

// Which artifact a bare JSON document holds, judged by its keys.
std::string sniff_type(const json& j) {
  if (j.is_array())
    return "triple";
  if (!j.is_object())
    throw ParseError("expected a JSON object");
  if (j.contains("b"))
    return ArtifactTraits<ExchangeMatrix>::name;
  if (j.contains("cluster"))
    return ArtifactTraits<Seed>::name;
  if (j.contains("elements"))
    return ArtifactTraits<CayleyTable>::name;
  if (j.contains("diagram") && j.contains("arrows"))
    return ArtifactTraits<HasseQuiver>::name;
  if (j.contains("arrows"))
    return ArtifactTraits<MultiQuiver>::name;
  if (j.contains("nodes") && j.contains("edges"))
    return ArtifactTraits<ExchangeGraph>::name;
  if (j.contains("nodes"))
    return ArtifactTraits<MarkovTree>::name;
  if (j.contains("edges") || j.contains("loops"))
    return ArtifactTraits<ValuedDiagram>::name;
  throw ParseError("unrecognised document");
}

/// Parses `data` as `type` and writes it back in normal form (JSON) or as
/// DOT when that type has one.
void export_artifact(const std::string& type, const json& data, bool dot) {
  auto out = [&](const auto& value) {
    emit(io::to_json(value));
    (void)dot;
  };
  auto out_dot = [&](const auto& value) {
    if (dot)
      std::cout << io::to_dot(value);
    else
      emit(io::to_json(value));
  };
  auto no_dot = [&] {
    if (dot)
      throw DomainError("no DOT form for " + type);
  };
  if (type == ArtifactTraits<ExchangeMatrix>::name)
    out_dot(io::exchange_matrix_from_json(data));
  else if (type == ArtifactTraits<MultiQuiver>::name)
    out_dot(io::multiquiver_from_json(data));
  else if (type == ArtifactTraits<ExchangeGraph>::name)
    out_dot(io::exchange_graph_from_json(data));
  else if (type == ArtifactTraits<HasseQuiver>::name)
    out_dot(io::hasse_from_json(data));
  else if (type == ArtifactTraits<MarkovTree>::name)
    out_dot(io::markov_tree_from_json(data));
  else if (type == ArtifactTraits<Seed>::name) {
    no_dot();
    out(io::seed_from_json(data));
  } else if (type == ArtifactTraits<ValuedDiagram>::name) {
    no_dot();
    out(io::diagram_from_json(data));
  } else if (type == ArtifactTraits<CayleyTable>::name) {
    no_dot();
    out(io::table_from_json(data));
  } else if (type == "triple") {
    no_dot();
    out(io::triple_from_json(data));
  } else
    throw ParseError("unknown artifact type " + type);
}

json load_input(const std::string& input, const std::string& entry,
                std::string* type = nullptr) {
  if (!entry.empty()) {
    SessionStore s(SessionStore::default_path());
    const auto& e = s.entry(entry);
    if (type)
      *type = e.type;
    return e.data;
  }
  if (input.empty())
    throw ParseError("one of --input or --entry is required");
  json j = read_json(input);
  if (type)
    *type = sniff_type(j);
  return j;
}

Seed seed_from_any(const json& j) {
  if (j.is_object() && j.contains("cluster"))
    return io::seed_from_json(j);
  return initial_seed(from_multiquiver(io::any_quiver_from_json(j)));
}

std::shared_ptr<const CoxeterSystem> load_system(const std::string& path) {
  return std::make_shared<const CoxeterSystem>(
      io::diagram_from_json(read_json(path)));
}

const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mw: quiver mutation, cluster seeds, Weyl groups, tilting "
               "mutation and Markov triples"};
  app.require_subcommand(1);

  std::string input, entry;
  std::vector<long long> word_raw, v_raw, w_raw;
  std::size_t depth = 0, cap = default_cap;
  Output out;

  // mutate
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver or exchange matrix");
  mutate_cmd->add_option("--input", input, "Quiver JSON file ('-' for stdin)");
  mutate_cmd->add_option("--entry", entry, "Read from the store instead");
  mutate_cmd->add_option("--word", word_raw, "Vertices, applied left to right");
  out.add_to(mutate_cmd);

  // seed
  auto* seed_cmd = app.add_subcommand("seed", "Mutate a seed");
  seed_cmd->add_option("--input", input, "Seed or quiver JSON file");
  seed_cmd->add_option("--entry", entry, "Read from the store instead");
  seed_cmd->add_option("--word", word_raw, "Vertices, applied left to right");
  out.add_to(seed_cmd, false);

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "Explore the exchange graph");
  closure_cmd->add_option("--input", input, "Seed or quiver JSON file");
  closure_cmd->add_option("--entry", entry, "Read from the store instead");
  closure_cmd->add_option("--depth", depth, "Mutation depth")->required();
  closure_cmd->add_option("--cap", cap, "Node cap");
  out.add_to(closure_cmd);

  // weyl
  std::string diagram_path;
  std::string side_str = "right";
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group queries");
  weyl_cmd->require_subcommand(1);
  auto add_diagram = [&](CLI::App* c) {
    c->add_option("--diagram", diagram_path, "Diagram JSON file")->required();
    c->add_option("--cap", cap, "Node cap");
  };
  auto* w_length = weyl_cmd->add_subcommand("length", "Length of a word");
  add_diagram(w_length);
  w_length->add_option("--word", word_raw, "Generators");
  out.add_to(w_length, false);
  auto* w_reduced = weyl_cmd->add_subcommand("reduced", "Reduced word of a word");
  add_diagram(w_reduced);
  w_reduced->add_option("--word", word_raw, "Generators");
  auto* w_bruhat = weyl_cmd->add_subcommand("bruhat", "Bruhat comparison v <= w");
  add_diagram(w_bruhat);
  w_bruhat->add_option("--v", v_raw, "Reduced word of v");
  w_bruhat->add_option("--w", w_raw, "Reduced word of w");
  auto* w_weak = weyl_cmd->add_subcommand("weak", "Weak order comparison v <= w");
  add_diagram(w_weak);
  w_weak->add_option("--v", v_raw, "Word of v");
  w_weak->add_option("--w", w_raw, "Word of w");
  w_weak->add_option("--side", side_str, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  auto* w_hasse = weyl_cmd->add_subcommand("hasse", "Right weak order Hasse quiver");
  add_diagram(w_hasse);
  w_hasse->add_option("--depth", depth, "Length bound")->required();
  out.add_to(w_hasse);

  // tilt
  auto* tilt_cmd = app.add_subcommand("tilt", "Tilting mutation");
  tilt_cmd->require_subcommand(1);
  auto* t_walk = tilt_cmd->add_subcommand("walk", "Mutate from Lambda along a word");
  add_diagram(t_walk);
  t_walk->add_option("--word", word_raw, "Generators");
  std::vector<long long> start_raw;
  t_walk->add_option("--start", start_raw, "Word of the starting state");
  auto* t_hasse = tilt_cmd->add_subcommand("hasse", "Hasse quiver of tilting modules");
  add_diagram(t_hasse);
  t_hasse->add_option("--depth", depth, "Length bound")->required();
  out.add_to(t_hasse);
  auto* t_k0 = tilt_cmd->add_subcommand("k0", "Action on the Grothendieck group");
  add_diagram(t_k0);
  t_k0->add_option("--word", word_raw, "Generators");

  // markov
  std::vector<std::string> triple_raw{"3", "3", "3"};
  std::size_t position = 0;
  bool dedup = false;
  auto* markov_cmd = app.add_subcommand("markov", "Markov triples");
  markov_cmd->require_subcommand(1);
  auto* m_step = markov_cmd->add_subcommand("step", "One graded mutation");
  m_step->add_option("--triple", triple_raw, "a b c")->expected(3);
  m_step->add_option("--position", position, "Position 1..3")->required();
  auto* m_tree = markov_cmd->add_subcommand("tree", "Tree of graded mutations");
  m_tree->add_option("--triple", triple_raw, "Root a b c (default 3 3 3)")->expected(3);
  m_tree->add_option("--depth", depth, "Depth")->required();
  m_tree->add_flag("--dedup", dedup, "Drop repeated unordered triples");
  m_tree->add_option("--cap", cap, "Node cap");
  out.add_to(m_tree);

  // mckay
  std::size_t order = 0;
  std::vector<long long> weights;
  auto* mckay_cmd = app.add_subcommand("mckay", "McKay quiver of a cyclic group");
  mckay_cmd->add_option("--order", order, "Group order")->required();
  mckay_cmd->add_option("--weights", weights, "Weights mod order")->required();
  out.add_to(mckay_cmd);

  // export
  auto* export_cmd = app.add_subcommand("export", "Re-emit an artifact");
  export_cmd->require_subcommand(1);
  auto* e_dot = export_cmd->add_subcommand("dot", "As DOT");
  auto* e_json = export_cmd->add_subcommand("json", "As normalised JSON");
  for (auto* c : {e_dot, e_json}) {
    c->add_option("--input", input, "JSON file");
    c->add_option("--entry", entry, "Store entry");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (*mutate_cmd) {
      json j = load_input(input, entry);
      if (j.is_object() && j.contains("b")) {
        ExchangeMatrix b = io::exchange_matrix_from_json(j);
        b = mutate(b, to_word(word_raw, b.size()));
        out.print(b);
      } else {
        MultiQuiver q = io::multiquiver_from_json(j);
        QuiverMutation r = mutate(q, to_word(word_raw, q.size()));
        for (const auto& c : r.cancelled_two_cycles)
          std::cerr << "cancelled 2-cycle at (" << c.first + 1 << ","
                    << c.second + 1 << ")\n";
        out.print(to_multiquiver(r.result));
      }
    } else if (*seed_cmd) {
      Seed s = seed_from_any(load_input(input, entry));
      s = mutate_seed(s, to_word(word_raw, s.rank()));
      emit(io::to_json(s));
      out.save(s);
    } else if (*closure_cmd) {
      Seed s = seed_from_any(load_input(input, entry));
      ExchangeGraph g = exchange_closure(s, depth, cap);
      std::cerr << g.nodes.size() << " seeds, " << g.distinct_clusters()
                << " clusters, " << g.cluster_variables.size()
                << " cluster variables\n";
      out.print(g);
    } else if (*weyl_cmd) {
      auto sys = load_system(diagram_path);
      if (*w_length) {
        Word w = to_word(word_raw, sys->rank());
        CayleyTable t(*sys, w.size(), cap);
        std::cout << length_of(t, evaluate(*sys, w)) << "\n";
        out.save(t);
      } else if (*w_reduced) {
        Word w = to_word(word_raw, sys->rank());
        Word r = descent_normal_form(*sys, evaluate(*sys, w), w.size());
        emit({{"word", io::word_to_json(r)}, {"length", r.size()}});
      } else if (*w_bruhat || *w_weak) {
        Word v = to_word(v_raw, sys->rank());
        Word w = to_word(w_raw, sys->rank());
        CayleyTable t(*sys, std::max(v.size(), w.size()), cap);
        if (*w_bruhat) {
          emit({{"leq", bruhat_leq_subword(t, v, w)}, {"order", "bruhat"}});
        } else {
          const Side side = side_str == "left" ? Side::left : Side::right;
          emit({{"leq", weak_leq(t, v, w, side)}, {"order", side_name(side)}});
        }
      } else if (*w_hasse) {
        HasseQuiver q = hasse_quiver(*sys, depth, cap);
        std::cerr << q.nodes.size() << " nodes, " << q.arrows.size()
                  << " arrows\n";
        out.print(q);
      }
    } else if (*tilt_cmd) {
      auto sys = load_system(diagram_path);
      if (*t_walk) {
        Word start = to_word(start_raw, sys->rank());
        TiltingState t(sys);
        for (const auto& m : walk(t, start))
          t = m.state;
        json steps = json::array();
        for (const auto& m : walk(t, to_word(word_raw, sys->rank()))) {
          json s = io::to_json(m.state);
          s["direction"] = m.direction == Direction::up ? "up" : "down";
          steps.push_back(std::move(s));
        }
        emit({{"start", io::to_json(t)}, {"steps", std::move(steps)}});
      } else if (*t_hasse) {
        HasseQuiver q = hasse_quiver(*sys, depth, cap);
        std::cerr << q.nodes.size() << " nodes, " << q.arrows.size()
                  << " arrows\n";
        out.print(q);
      } else if (*t_k0) {
        TiltingState t(sys);
        for (const auto& m : walk(t, to_word(word_raw, sys->rank())))
          t = m.state;
        emit({{"word", io::word_to_json(t.reduced_word())},
              {"matrix", io::to_json(k0_class_matrix(t))}});
      }
    } else if (*markov_cmd) {
      json tj = json::array();
      for (const auto& s : triple_raw)
        tj.push_back(s);
      MarkovTriple root = io::triple_from_json(tj);
      if (*m_step) {
        if (position < 1 || position > 3)
          throw DomainError("triple position " + std::to_string(position) +
                            " out of range 1..3");
        GradedStep s = graded_mutation(root, position - 1);
        if (!s.positive)
          std::cerr << "result is not positive\n";
        emit({{"triple", io::to_json(s.triple)}, {"positive", s.positive}});
      } else {
        MarkovTree t = markov_tree(root, depth, dedup, cap);
        std::cerr << t.nodes.size() << " nodes, "
                  << t.unordered_labels().size() << " unordered triples\n";
        out.print(t);
      }
    } else if (*mckay_cmd) {
      out.print(mckay_cyclic(order, weights));
    } else if (*export_cmd) {
      std::string type;
      json data = load_input(input, entry, &type);
      export_artifact(type, data, static_cast<bool>(*e_dot));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain_failure;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource_failure;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return ok;
}
