#include "negasm/model.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace negasm {

Assembly::Assembly(std::vector<PlacedTile> tiles) : tiles_(std::move(tiles)) {
  canonicalize();
}

Assembly Assembly::singleton(const Tile& t) {
  return Assembly({PlacedTile{{0, 0}, t}});
}

void Assembly::canonicalize() {
  if (tiles_.empty()) return;
  int minx = std::numeric_limits<int>::max();
  int miny = std::numeric_limits<int>::max();
  for (const auto& pt : tiles_) {
    minx = std::min(minx, pt.pos.x);
    miny = std::min(miny, pt.pos.y);
  }
  for (auto& pt : tiles_) {
    pt.pos.x -= minx;
    pt.pos.y -= miny;
  }
  std::sort(tiles_.begin(), tiles_.end(),
            [](const PlacedTile& l, const PlacedTile& r) { return l.pos < r.pos; });
  index_.clear();
  for (std::size_t i = 0; i < tiles_.size(); ++i) {
    auto [it, fresh] = index_.emplace(tiles_[i].pos, static_cast<int>(i));
    if (!fresh) throw std::invalid_argument("overlapping tiles in assembly");
  }
}

const Tile* Assembly::tile_at(Coord c) const {
  auto it = index_.find(c);
  return it == index_.end() ? nullptr : &tiles_[it->second].tile;
}

int Assembly::index_at(Coord c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool Assembly::has_label(const std::string& label) const {
  for (const auto& pt : tiles_)
    if (pt.tile.label == label) return true;
  return false;
}

bool Assembly::connected() const {
  if (tiles_.empty()) return true;
  std::vector<char> seen(tiles_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
      int j = index_at(step(tiles_[i].pos, d));
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        ++visited;
        stack.push_back(j);
      }
    }
  }
  return visited == tiles_.size();
}

Assembly Assembly::merged(const Assembly& other, int dx, int dy) const {
  std::vector<PlacedTile> all = tiles_;
  for (const auto& pt : other.tiles())
    all.push_back(PlacedTile{{pt.pos.x + dx, pt.pos.y + dy}, pt.tile});
  return Assembly(std::move(all));
}

Assembly Assembly::restricted(const std::vector<char>& keep) const {
  std::vector<PlacedTile> sel;
  for (std::size_t i = 0; i < tiles_.size(); ++i)
    if (keep[i]) sel.push_back(tiles_[i]);
  return Assembly(std::move(sel));
}

std::size_t Assembly::hash() const {
  std::size_t h = tiles_.size();
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  std::hash<std::string> hs;
  for (const auto& pt : tiles_) {
    mix(static_cast<std::size_t>(pt.pos.x) * 1000003u + pt.pos.y);
    mix(hs(pt.tile.label));
    for (const auto& g : pt.tile.face) {
      if (g) {
        mix(hs(g->id));
        mix(g->strength.is_infinite()
                ? 0x7fffffffu
                : static_cast<std::size_t>(g->strength.num()) * 31 + g->strength.den());
      } else {
        mix(0xdeadu);
      }
    }
  }
  return h;
}

static std::optional<Rat> bond_between(const Tile& s, Dir d, const Tile& t) {
  const auto& g1 = s.at(d);
  const auto& g2 = t.at(opposite(d));
  if (!g1 || !g2) return std::nullopt;
  if (g1->id != g2->id) return std::nullopt;  // diagonal glue function
  return g1->strength;
}

BondGraph bond_graph(const Assembly& a) {
  BondGraph g;
  g.n = static_cast<int>(a.size());
  for (int i = 0; i < g.n; ++i) {
    const auto& pt = a[i];
    for (Dir d : {Dir::N, Dir::E}) {  // each adjacent pair once
      int j = a.index_at(step(pt.pos, d));
      if (j < 0) continue;
      auto w = bond_between(pt.tile, d, a[j].tile);
      if (w && !(*w == Rat(0)))
        g.edges.push_back({std::min(i, j), std::max(i, j), *w});
    }
  }
  return g;
}

bool overlaps(const Assembly& a, const Assembly& b, int dx, int dy) {
  for (const auto& pt : b.tiles())
    if (a.tile_at({pt.pos.x + dx, pt.pos.y + dy})) return true;
  return false;
}

Rat crossing_strength(const Assembly& a, const Assembly& b, int dx, int dy) {
  Rat total(0);
  for (const auto& pt : b.tiles()) {
    Coord at{pt.pos.x + dx, pt.pos.y + dy};
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
      const Tile* neighbor = a.tile_at(step(at, d));
      if (!neighbor) continue;
      auto w = bond_between(pt.tile, d, *neighbor);
      if (w) total += *w;
    }
  }
  return total;
}

}  // namespace negasm
