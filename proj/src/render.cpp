#include "negasm/render.hpp"

#include <algorithm>
#include <sstream>

namespace negasm {

namespace {

constexpr int kTile = 48;
constexpr int kPad = 12;

void emit_tile(std::ostringstream& os, const PlacedTile& pt, int ox, int oy, int maxy) {
  int px = ox + pt.pos.x * kTile;
  int py = oy + (maxy - pt.pos.y) * kTile;  // flip y for screen coords
  os << "<rect x='" << px << "' y='" << py << "' width='" << kTile << "' height='"
     << kTile << "' fill='#f5f1e6' stroke='#444'/>\n";
  if (!pt.tile.label.empty()) {
    os << "<text x='" << px + kTile / 2 << "' y='" << py + kTile / 2 + 4
       << "' font-size='10' text-anchor='middle' fill='#222'>" << pt.tile.label
       << "</text>\n";
  }
  struct FacePos {
    Dir d;
    int tx, ty;
  };
  const FacePos faces[4] = {{Dir::N, kTile / 2, 9},
                            {Dir::E, kTile - 6, kTile / 2 + 3},
                            {Dir::S, kTile / 2, kTile - 4},
                            {Dir::W, 6, kTile / 2 + 3}};
  for (const auto& fp : faces) {
    const auto& g = pt.tile.at(fp.d);
    if (!g) continue;
    bool neg = g->strength.is_negative();
    os << "<text x='" << px + fp.tx << "' y='" << py + fp.ty
       << "' font-size='7' text-anchor='middle' fill='" << (neg ? "#a00" : "#05a")
       << "'>" << g->id << " " << g->strength.str() << "</text>\n";
  }
}

void emit_assembly(std::ostringstream& os, const Assembly& a, int ox, int oy,
                   const std::string& title) {
  int maxy = 0;
  for (const auto& pt : a.tiles()) maxy = std::max(maxy, pt.pos.y);
  if (!title.empty())
    os << "<text x='" << ox << "' y='" << oy - 4 << "' font-size='12' fill='#000'>"
       << title << "</text>\n";
  for (const auto& pt : a.tiles()) emit_tile(os, pt, ox, oy, maxy);
}

std::pair<int, int> extent(const Assembly& a) {
  int mx = 0, my = 0;
  for (const auto& pt : a.tiles()) {
    mx = std::max(mx, pt.pos.x + 1);
    my = std::max(my, pt.pos.y + 1);
  }
  return {mx * kTile, my * kTile};
}

}  // namespace

std::string render_svg(const Assembly& a, const std::string& title) {
  auto [w, h] = extent(a);
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w + 2 * kPad << "' height='"
     << h + 2 * kPad + 16 << "'>\n";
  emit_assembly(os, a, kPad, kPad + 16, title);
  os << "</svg>\n";
  return os.str();
}

std::string render_svg_frames(const std::vector<Assembly>& frames,
                              const std::vector<std::string>& titles) {
  int w = 0, y = kPad;
  std::ostringstream body;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    auto [fw, fh] = extent(frames[i]);
    w = std::max(w, fw);
    body << "<g>\n";
    emit_assembly(body, frames[i], kPad, y + 16,
                  i < titles.size() ? titles[i] : "frame " + std::to_string(i));
    body << "</g>\n";
    y += fh + 40;
  }
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w + 2 * kPad << "' height='"
     << y + kPad << "'>\n"
     << body.str() << "</svg>\n";
  return os.str();
}

std::string render_ascii(const Assembly& a) {
  int mx = 0, my = 0;
  for (const auto& pt : a.tiles()) {
    mx = std::max(mx, pt.pos.x);
    my = std::max(my, pt.pos.y);
  }
  std::ostringstream os;
  for (int y = my; y >= 0; --y) {
    for (int x = 0; x <= mx; ++x) {
      const Tile* t = a.tile_at({x, y});
      if (!t) {
        os << ' ';
      } else if (t->label.empty()) {
        os << '#';
      } else {
        os << t->label[0];
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace negasm
