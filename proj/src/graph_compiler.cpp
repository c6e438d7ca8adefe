#include "negasm/graph_compiler.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace negasm {

void DirectedGraphSpec::validate() const {
  if (vertices.empty()) throw CompileError("EmptyGraph: no vertices");
  std::set<std::string> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw CompileError("duplicate vertex name");
  if (!vs.count(start)) throw CompileError("StartMissing: start vertex not in graph");
  for (const auto& [u, v] : edges) {
    if (!vs.count(u) || !vs.count(v))
      throw CompileError("EdgeMissing: edge endpoint not a vertex: " + u + "->" + v);
    if (u == v)
      throw CompileError("self-loop edges are not realizable by this template: " + u);
  }
}

DirectedGraphSpec parse_graph_json(const std::string& text) {
  DirectedGraphSpec g;
  nlohmann::json j = nlohmann::json::parse(text);
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges"))
    g.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  g.start = j.at("start").get<std::string>();
  g.validate();
  return g;
}

DirectedGraphSpec parse_graph_text(const std::string& text) {
  DirectedGraphSpec g;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("start:", 0) == 0) {
      g.start = trim(line.substr(6));
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw CompileError("ParseError: expected 'u -> v', got: " + line);
    std::string u = trim(line.substr(0, arrow));
    std::string v = trim(line.substr(arrow + 2));
    if (u.empty() || v.empty()) throw CompileError("ParseError: bad edge: " + line);
    for (const auto& x : {u, v})
      if (seen.insert(x).second) g.vertices.push_back(x);
    g.edges.emplace_back(u, v);
  }
  if (g.start.empty() && !g.vertices.empty()) g.start = g.vertices.front();
  g.validate();
  return g;
}

DirectedGraphSpec quaternary_oscillator() {
  DirectedGraphSpec g;
  g.vertices = {"0", "1", "2", "3"};
  g.edges = {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}};
  g.start = "0";
  return g;
}

namespace {

using P = GadgetPlan;

Glue shared(const std::string& id, int eighths) { return Glue{id, Rat::eighths(eighths)}; }
Glue inf_glue(const std::string& id) { return Glue{id, Rat::infinity()}; }

struct CellBuilder {
  std::vector<PlacedTile> tiles;
  std::map<Coord, int> at;

  int put(Coord c, const std::string& label) {
    at[c] = static_cast<int>(tiles.size());
    tiles.push_back(PlacedTile{c, Tile{{}, label}});
    return at[c];
  }
  Tile& tile(Coord c) { return tiles[at.at(c)].tile; }
  // Infinite bond between two placed, adjacent tiles.
  void weld(Coord a, Coord b, const std::string& id) {
    Dir d;
    if (b.x == a.x + 1 && b.y == a.y) d = Dir::E;
    else if (b.x == a.x - 1 && b.y == a.y) d = Dir::W;
    else if (b.y == a.y + 1 && b.x == a.x) d = Dir::N;
    else d = Dir::S;
    tile(a).at(d) = inf_glue(id);
    tile(b).at(opposite(d)) = inf_glue(id);
  }
};

}  // namespace

GraphCompiler::GraphCompiler(DirectedGraphSpec g) : graph_(std::move(g)) {
  graph_.validate();
}

Assembly GraphCompiler::cell_assembly() const {
  CellBuilder b;
  for (int x = 0; x <= 6; ++x) b.put({x, 0}, "cell");
  b.put({0, 1}, "cell");  // T_L1
  b.put({0, 2}, "cell");  // T_L2
  b.put({6, 1}, "cell");  // T_R1
  for (int x = 0; x < 6; ++x) b.weld({x, 0}, {x + 1, 0}, "cb" + std::to_string(x));
  b.weld({0, 0}, {0, 1}, "ctl1");
  b.weld({0, 1}, {0, 2}, "ctl2");
  b.weld({6, 0}, {6, 1}, "ctr1");
  b.tile({0, 2}).at(Dir::E) = shared("e6", P::kE6);
  b.tile({0, 1}).at(Dir::E) = shared("w1", P::kW1);
  b.tile({1, 0}).at(Dir::N) = shared("ws", P::kWS);
  b.tile({2, 0}).at(Dir::N) = shared("c", P::kC);
  b.tile({3, 0}).at(Dir::N) = shared("d", P::kD);
  b.tile({4, 0}).at(Dir::N) = shared("wa", P::kWA);
  b.tile({5, 0}).at(Dir::N) = shared("n5", P::kN5);
  b.tile({6, 1}).at(Dir::W) = shared("n5", P::kN5);
  return Assembly(std::move(b.tiles));
}

static Glue vglue(const std::string& kind, const std::string& v, int eighths) {
  return Glue{kind + ":" + v, Rat::eighths(eighths)};
}

Assembly GraphCompiler::vertex_left(const std::string& v) const {
  Tile t;
  t.label = "L:" + v;
  t.at(Dir::W) = vglue("prime", v, P::kPrime);
  t.at(Dir::N) = vglue("plus", v, P::kPlus);
  t.at(Dir::S) = shared("c", P::kC);
  t.at(Dir::E) = vglue("dot", v, P::kDot);
  return Assembly::singleton(t);
}

Assembly GraphCompiler::vertex_right(const std::string& v) const {
  Tile t;
  t.label = "R:" + v;
  t.at(Dir::W) = vglue("dot", v, P::kDot);
  t.at(Dir::N) = vglue("star", v, P::kStar);
  t.at(Dir::S) = shared("d", P::kD);
  t.at(Dir::E) = vglue("a", v, P::kA);
  return Assembly::singleton(t);
}

Assembly GraphCompiler::attached_tile(const std::string& v) const {
  Tile t;
  t.label = "A:" + v;
  t.at(Dir::W) = vglue("a", v, P::kA);
  t.at(Dir::S) = shared("wa", P::kWA);
  t.at(Dir::N) = shared("wb", P::kWB);
  t.at(Dir::E) = vglue("azk", v, P::kAzk);
  return Assembly::singleton(t);
}

Assembly GraphCompiler::detach_tile(const std::string& v) const {
  Tile t;
  t.label = "D:" + v;
  t.at(Dir::W) = shared("w1", P::kW1);
  t.at(Dir::S) = shared("ws", P::kWS);
  t.at(Dir::N) = vglue("det", v, P::kDet);
  t.at(Dir::E) = vglue("prime", v, P::kPrime);
  return Assembly::singleton(t);
}

Assembly GraphCompiler::edge_gadget(const std::string& u, const std::string& v) const {
  std::string e = u + ">" + v;
  CellBuilder b;
  for (int x = 1; x <= 5; ++x) b.put({x, 2}, "G:" + e);
  for (int x = 1; x < 5; ++x) b.weld({x, 2}, {x + 1, 2}, "gb" + std::to_string(x) + ":" + e);
  b.tile({1, 2}).at(Dir::W) = shared("e6", P::kE6);
  b.tile({1, 2}).at(Dir::S) = vglue("det", u, P::kDet);
  b.tile({2, 2}).at(Dir::S) = vglue("plus", u, P::kPlus);
  b.tile({3, 2}).at(Dir::S) = vglue("star", v, P::kStar);
  b.tile({4, 2}).at(Dir::S) = shared("wb", P::kWB);
  b.tile({5, 2}).at(Dir::S) = Glue{"z:" + e, Rat::eighths(P::kZ)};
  return Assembly(std::move(b.tiles));
}

Assembly GraphCompiler::edge_detach_tile(const std::string& u,
                                         const std::string& v) const {
  std::string e = u + ">" + v;
  Tile t;
  t.label = "Z:" + e;
  t.at(Dir::N) = Glue{"z:" + e, Rat::eighths(P::kZ)};
  t.at(Dir::W) = vglue("azk", v, P::kAzk);
  t.at(Dir::S) = shared("n5", P::kN5);
  t.at(Dir::E) = shared("n5", P::kN5);
  return Assembly::singleton(t);
}

Assembly GraphCompiler::quiescent(const std::string& v) const {
  Assembly cell = cell_assembly();
  cell = cell.merged(vertex_left(v), 2, 1);
  cell = cell.merged(vertex_right(v), 3, 1);
  cell = cell.merged(attached_tile(v), 4, 1);
  return cell;
}

AssemblySystem GraphCompiler::compile() const {
  AssemblySystem s;
  s.focus_label = "cell";
  s.add(quiescent(graph_.start));
  for (const auto& v : graph_.vertices) {
    s.add(vertex_left(v));
    s.add(vertex_right(v));
    s.add(attached_tile(v));
    s.add(detach_tile(v));
  }
  for (const auto& [u, v] : graph_.edges) {
    s.add(edge_gadget(u, v));
    s.add(edge_detach_tile(u, v));
  }
  s.normalize();
  return s;
}

std::vector<Assembly> GraphCompiler::transition_stages(const std::string& u,
                                                       const std::string& v) const {
  if (std::find(graph_.edges.begin(), graph_.edges.end(), std::make_pair(u, v)) ==
      graph_.edges.end())
    throw CompileError("EdgeMissing: " + u + "->" + v);
  std::vector<Assembly> stages;
  Assembly s1 = quiescent(u);
  stages.push_back(s1);
  Assembly s2 = s1.merged(edge_gadget(u, v), 1, 2);
  stages.push_back(s2);
  Assembly s3 = s2.merged(detach_tile(u), 1, 1);
  stages.push_back(s3);

  // Rebuild later stages from parts (translation-canonical equality makes
  // this equivalent to removing pieces from s3).
  Assembly cell = cell_assembly();
  Assembly gd = cell.merged(edge_gadget(u, v), 1, 2).merged(detach_tile(u), 1, 1);
  Assembly s4 = gd.merged(vertex_right(u), 3, 1).merged(attached_tile(u), 4, 1);
  stages.push_back(s4);  // left vertex tile detached
  stages.push_back(gd);  // old pair + attached tile detached
  Assembly s6 = gd.merged(vertex_right(v), 3, 1);
  stages.push_back(s6);
  Assembly s7 = s6.merged(vertex_left(v), 2, 1);
  stages.push_back(s7);
  Assembly s8 = s7.merged(attached_tile(v), 4, 1);
  stages.push_back(s8);
  Assembly s9 = s8.merged(edge_detach_tile(u, v), 5, 1);
  stages.push_back(s9);
  stages.push_back(quiescent(v));
  return stages;
}

std::optional<std::string> GraphCompiler::status_map(const Assembly& a) const {
  for (const auto& v : graph_.vertices)
    if (a == quiescent(v)) return v;
  return std::nullopt;
}

}  // namespace negasm
