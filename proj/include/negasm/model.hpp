#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negasm/rational.hpp"

namespace negasm {

// Faces in fixed order; Dir arithmetic assumes this layout.
enum class Dir : int { N = 0, E = 1, S = 2, W = 3 };

inline Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

struct Coord {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline Coord step(Coord c, Dir d) {
  switch (d) {
    case Dir::N: return {c.x, c.y + 1};
    case Dir::E: return {c.x + 1, c.y};
    case Dir::S: return {c.x, c.y - 1};
    case Dir::W: return {c.x - 1, c.y};
  }
  return c;
}

struct Glue {
  std::string id;
  Rat strength;
  friend auto operator<=>(const Glue&, const Glue&) = default;
};

// Unit square, up to one glue per face, optional label.
struct Tile {
  std::array<std::optional<Glue>, 4> face;  // indexed by Dir
  std::string label;

  const std::optional<Glue>& at(Dir d) const { return face[static_cast<int>(d)]; }
  std::optional<Glue>& at(Dir d) { return face[static_cast<int>(d)]; }
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

struct PlacedTile {
  Coord pos;
  Tile tile;
  friend auto operator<=>(const PlacedTile&, const PlacedTile&) = default;
};

// A translation-canonicalized set of placed tiles (min x = min y = 0),
// kept sorted by coordinate. Value type; comparable and hashable.
class Assembly {
 public:
  Assembly() = default;
  explicit Assembly(std::vector<PlacedTile> tiles);

  static Assembly singleton(const Tile& t);

  std::size_t size() const { return tiles_.size(); }
  bool empty() const { return tiles_.empty(); }
  const std::vector<PlacedTile>& tiles() const { return tiles_; }
  const PlacedTile& operator[](std::size_t i) const { return tiles_[i]; }

  const Tile* tile_at(Coord c) const;
  int index_at(Coord c) const;  // -1 when vacant

  bool has_label(const std::string& label) const;
  bool connected() const;

  // Union with `other` translated by (dx,dy); throws on overlap.
  Assembly merged(const Assembly& other, int dx, int dy) const;
  // Sub-assembly of the tiles selected by `keep` (size() entries).
  Assembly restricted(const std::vector<char>& keep) const;

  friend auto operator<=>(const Assembly&, const Assembly&) = default;

  std::size_t hash() const;

 private:
  void canonicalize();
  std::vector<PlacedTile> tiles_;            // sorted by pos
  std::map<Coord, int> index_;               // pos -> tile index
};

struct BondEdge {
  int a = 0;
  int b = 0;  // tile indices, a < b
  Rat weight;
};

// Weighted adjacency between tiles: only equal glue ids on facing sides
// bond (diagonal glue function); zero-weight edges are omitted.
struct BondGraph {
  int n = 0;
  std::vector<BondEdge> edges;
};

BondGraph bond_graph(const Assembly& a);

// Sum of matching-glue bond weights between tiles of `a` and tiles of `b`
// translated by (dx,dy); coordinates must not overlap.
Rat crossing_strength(const Assembly& a, const Assembly& b, int dx, int dy);
bool overlaps(const Assembly& a, const Assembly& b, int dx, int dy);

}  // namespace negasm
