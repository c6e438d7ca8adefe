#include "negasm/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace negasm {

using nlohmann::json;

static const char* kFaceNames[4] = {"n", "e", "s", "w"};

json to_json(const Assembly& a) {
  json tiles = json::array();
  for (const auto& pt : a.tiles()) {
    json jt;
    jt["x"] = pt.pos.x;
    jt["y"] = pt.pos.y;
    if (!pt.tile.label.empty()) jt["label"] = pt.tile.label;
    json glues = json::object();
    for (int d = 0; d < 4; ++d) {
      const auto& g = pt.tile.face[d];
      if (g) glues[kFaceNames[d]] = {{"id", g->id}, {"strength", g->strength.str()}};
    }
    if (!glues.empty()) jt["glues"] = glues;
    tiles.push_back(jt);
  }
  return json{{"tiles", tiles}};
}

Assembly assembly_from_json(const json& j) {
  std::vector<PlacedTile> tiles;
  for (const auto& jt : j.at("tiles")) {
    PlacedTile pt;
    pt.pos.x = jt.at("x").get<int>();
    pt.pos.y = jt.at("y").get<int>();
    if (jt.contains("label")) pt.tile.label = jt["label"].get<std::string>();
    if (jt.contains("glues")) {
      for (int d = 0; d < 4; ++d) {
        if (jt["glues"].contains(kFaceNames[d])) {
          const auto& jg = jt["glues"][kFaceNames[d]];
          pt.tile.face[d] = Glue{jg.at("id").get<std::string>(),
                                 Rat::parse(jg.at("strength").get<std::string>())};
        }
      }
    }
    tiles.push_back(pt);
  }
  return Assembly(std::move(tiles));
}

json to_json(const AssemblySystem& s) {
  json init = json::array();
  for (const auto& a : s.initial) init.push_back(to_json(a));
  return json{{"initial", init},
              {"focus_label", s.focus_label},
              {"bounds",
               {{"max_assembly_size", s.bounds.max_assembly_size},
                {"max_producibles", s.bounds.max_producibles},
                {"max_depth", s.bounds.max_depth}}}};
}

AssemblySystem system_from_json(const json& j) {
  AssemblySystem s;
  for (const auto& ja : j.at("initial")) s.initial.push_back(assembly_from_json(ja));
  if (j.contains("focus_label")) s.focus_label = j["focus_label"].get<std::string>();
  if (j.contains("bounds")) {
    const auto& b = j["bounds"];
    if (b.contains("max_assembly_size"))
      s.bounds.max_assembly_size = b["max_assembly_size"].get<std::size_t>();
    if (b.contains("max_producibles"))
      s.bounds.max_producibles = b["max_producibles"].get<std::size_t>();
    if (b.contains("max_depth")) s.bounds.max_depth = b["max_depth"].get<std::size_t>();
  }
  s.normalize();
  return s;
}

std::string canonical_key(const Assembly& a) {
  std::ostringstream os;
  for (const auto& pt : a.tiles()) {
    os << pt.pos.x << ',' << pt.pos.y << ':' << pt.tile.label;
    for (int d = 0; d < 4; ++d) {
      const auto& g = pt.tile.face[d];
      if (g) os << '|' << kFaceNames[d] << '=' << g->id << '@' << g->strength.str();
    }
    os << ';';
  }
  return os.str();
}

void AssemblySystem::add(const Assembly& a) { initial.push_back(a); }

void AssemblySystem::normalize() {
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
}

}  // namespace negasm
