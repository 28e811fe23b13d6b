#ifndef MUTWB_STORE_HPP
#define MUTWB_STORE_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace mutwb {

template <typename T>
struct ArtifactTraits;

#define MUTWB_ARTIFACT(Type, tag, reader)                                      \
  template <>                                                                  \
  struct ArtifactTraits<Type> {                                                \
    static constexpr const char* name = tag;                                   \
    static Type read(const io::json& j) { return io::reader(j); }              \
  };

MUTWB_ARTIFACT(ExchangeMatrix, "exchange_matrix", exchange_matrix_from_json)
MUTWB_ARTIFACT(MultiQuiver, "quiver", multiquiver_from_json)
MUTWB_ARTIFACT(Seed, "seed", seed_from_json)
MUTWB_ARTIFACT(ExchangeGraph, "exchange_graph", exchange_graph_from_json)
MUTWB_ARTIFACT(ValuedDiagram, "diagram", diagram_from_json)
MUTWB_ARTIFACT(CayleyTable, "table", table_from_json)
MUTWB_ARTIFACT(HasseQuiver, "hasse_quiver", hasse_from_json)
MUTWB_ARTIFACT(MarkovTree, "markov_tree", markov_tree_from_json)

#undef MUTWB_ARTIFACT

/// Named, typed artifacts persisted as one JSON document:
///   {"format": "mutwb-store/1", "entries": {name: {"type": t, "data": d}}}
/// Saving sorts names and uses fixed formatting, so save/load/save is
/// byte-identical.
class SessionStore {
public:
  static constexpr const char* format_tag = "mutwb-store/1";

  struct Entry {
    std::string type;
    io::json data;
  };

  /// $MW_STORE if set, otherwise ./mw_store.json.
  static std::filesystem::path default_path() {
    if (const char* env = std::getenv("MW_STORE"); env && *env)
      return env;
    return "mw_store.json";
  }

  explicit SessionStore(std::filesystem::path path) : path_(std::move(path)) {
    if (std::filesystem::exists(path_))
      load();
  }

  const std::filesystem::path& path() const noexcept { return path_; }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& [name, e] : entries_)
      out.push_back(name);
    return out;
  }

  bool contains(const std::string& name) const {
    return entries_.count(name) != 0;
  }

  const Entry& entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end())
      throw DomainError("no store entry named \"" + name + "\"");
    return it->second;
  }

  void put_json(const std::string& name, std::string type, io::json data) {
    entries_[name] = {std::move(type), std::move(data)};
  }

  template <typename T>
  void put(const std::string& name, const T& value) {
    put_json(name, ArtifactTraits<T>::name, io::to_json(value));
  }

  template <typename T>
  T get(const std::string& name) const {
    const Entry& e = entry(name);
    if (e.type != ArtifactTraits<T>::name)
      throw DomainError("store entry \"" + name + "\" has type " + e.type +
                        ", not " + ArtifactTraits<T>::name);
    return ArtifactTraits<T>::read(e.data);
  }

  std::string serialize() const {
    io::json doc;
    doc["format"] = format_tag;
    io::json entries = io::json::object();
    for (const auto& [name, e] : entries_)
      entries[name] = {{"type", e.type}, {"data", e.data}};
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
  }

  void save() const {
    if (path_.has_parent_path())
      std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write store " + path_.string());
    out << serialize();
  }

private:
  void load() {
    std::ifstream in(path_, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    io::json doc;
    try {
      doc = io::json::parse(buf.str());
    } catch (const std::exception& e) {
      throw ParseError("store " + path_.string() + " is not JSON: " + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != format_tag)
      throw ParseError("store " + path_.string() + " lacks format tag " +
                       format_tag);
    for (const auto& [name, e] : doc.at("entries").items()) {
      if (!e.contains("type") || !e.contains("data"))
        throw ParseError("store entry \"" + name + "\" is malformed");
      entries_[name] = {e.at("type").get<std::string>(), e.at("data")};
    }
  }

  std::filesystem::path path_;
  std::map<std::string, Entry> entries_;
};

} // namespace mutwb

#endif
