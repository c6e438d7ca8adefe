#include "negasm/cuts.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

namespace negasm {

CutConfig default_cut_config() {
  CutConfig cfg;
  if (const char* env = std::getenv("NEGASM_MAX_CUT_TILES")) {
    long v = std::atol(env);
    if (v > 0) cfg.max_tiles = static_cast<std::size_t>(v);
  }
  return cfg;
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Assembly contracted along infinite bonds: supernodes move as blocks, so
// cut search runs over a much smaller graph.
struct Contracted {
  int n = 0;
  std::vector<int> group;       // tile index -> supernode
  std::vector<BondEdge> edges;  // finite edges between supernodes
  Rat negative_total{0};        // sum of all negative edge weights
};

Contracted quotient(const Assembly& a, const BondGraph& g, DSU& dsu) {
  Contracted c;
  std::map<int, int> remap;
  c.group.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    int root = dsu.find(i);
    auto [it, fresh] = remap.emplace(root, c.n);
    if (fresh) ++c.n;
    c.group[i] = it->second;
  }
  std::map<std::pair<int, int>, Rat> acc;
  for (const auto& e : g.edges) {
    if (e.weight.is_infinite()) continue;
    int u = c.group[e.a], v = c.group[e.b];
    if (u == v) continue;
    auto key = std::minmax(u, v);
    auto [it, fresh] = acc.emplace(std::make_pair(key.first, key.second), e.weight);
    if (!fresh) it->second += e.weight;
  }
  for (auto& [k, w] : acc) {
    if (w == Rat(0)) continue;
    c.edges.push_back({k.first, k.second, w});
    if (w.is_negative()) c.negative_total += w;
  }
  (void)a;
  return c;
}

Contracted contract(const Assembly& a) {
  BondGraph g = bond_graph(a);
  DSU dsu(g.n);
  for (const auto& e : g.edges)
    if (e.weight.is_infinite()) dsu.unite(e.a, e.b);
  return quotient(a, g, dsu);
}

// Branch and bound over bipartitions of the supernodes, node 0 fixed on
// side 0. A branch is pruned when its settled crossing weight plus the
// total weight of still-unsettled negative edges cannot drop below the
// threshold; with negative glues this is the only sound bound.
struct CutSearch {
  const Contracted& c;
  Rat threshold;
  std::vector<std::vector<std::pair<int, Rat>>> adj;
  std::vector<int> side;

  CutSearch(const Contracted& cc, Rat thr) : c(cc), threshold(thr), side(cc.n, -1) {
    adj.resize(c.n);
    for (const auto& e : c.edges) {
      adj[e.a].push_back({e.b, e.weight});
      adj[e.b].push_back({e.a, e.weight});
    }
  }

  template <typename Emit>
  void run(Emit emit) {
    if (c.n < 2) return;
    side[0] = 0;
    recurse(1, Rat(0), c.negative_total, false, emit);
  }

  template <typename Emit>
  void recurse(int i, Rat crossing, Rat neg_slack, bool side1_nonempty, Emit& emit) {
    if (!threshold.is_infinite() && crossing + neg_slack >= threshold) return;
    if (i == c.n) {
      if (side1_nonempty) emit(side, crossing);
      return;
    }
    for (int s = 0; s <= 1; ++s) {
      side[i] = s;
      Rat add(0), settled_neg(0);
      for (const auto& [peer, w] : adj[i]) {
        if (peer > i) continue;  // undecided
        if (side[peer] != s) add += w;
        if (w.is_negative()) settled_neg += w;
      }
      recurse(i + 1, crossing + add, neg_slack - settled_neg, side1_nonempty || s == 1,
              emit);
    }
    side[i] = -1;
  }
};

Rat search_min(const Contracted& c) {
  if (c.n < 2) return Rat::infinity();
  // Upper bound: the cut isolating supernode 0.
  Rat best(0);
  for (const auto& e : c.edges)
    if (e.a == 0 || e.b == 0) best += e.weight;
  CutSearch search(c, best);
  auto emit = [&](const std::vector<int>&, Rat w) {
    if (w < search.threshold) {
      best = w;
      search.threshold = w;
    }
  };
  search.run(emit);
  return best;
}

std::vector<char> expand_sides(const Contracted& c, const std::vector<int>& super_side,
                               std::size_t ntiles) {
  std::vector<char> out(ntiles);
  for (std::size_t i = 0; i < ntiles; ++i)
    out[i] = static_cast<char>(super_side[c.group[i]]);
  return out;
}

}  // namespace

Rat cut_weight(const Assembly& a, const std::vector<char>& side) {
  BondGraph g = bond_graph(a);
  Rat w(0);
  for (const auto& e : g.edges)
    if (side[e.a] != side[e.b]) w += e.weight;
  return w;
}

Rat min_cut_weight(const Assembly& a, const CutConfig& cfg) {
  if (a.size() > cfg.max_tiles) throw SizeLimitExceeded(a.size(), cfg.max_tiles);
  if (a.size() < 2) return Rat::infinity();
  return search_min(contract(a));
}

bool is_stable(const Assembly& a, const CutConfig& cfg) {
  if (a.empty()) return false;
  if (!a.connected()) return false;
  return min_cut_weight(a, cfg) >= Rat(1);
}

std::vector<Break> enumerate_breaks(const Assembly& a, const CutConfig& cfg) {
  std::vector<Break> out;
  if (a.size() > cfg.max_tiles) throw SizeLimitExceeded(a.size(), cfg.max_tiles);
  if (a.size() < 2) return out;
  Contracted c = contract(a);
  if (c.n < 2) return out;
  CutSearch search(c, Rat(1));
  auto emit = [&](const std::vector<int>& super_side, Rat w) {
    if (w >= Rat(1)) return;
    auto side = expand_sides(c, super_side, a.size());
    std::vector<char> keep_a(a.size()), keep_b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      keep_a[i] = !side[i];
      keep_b[i] = side[i];
    }
    out.push_back(Break{a.restricted(keep_a), a.restricted(keep_b), Cut{side, w}});
  };
  search.run(emit);
  std::sort(out.begin(), out.end(), [](const Break& l, const Break& r) {
    if (l.piece_a != r.piece_a) return l.piece_a < r.piece_a;
    return l.piece_b < r.piece_b;
  });
  return out;
}

Rat min_cut_weight_same_side(const Assembly& a, const std::vector<int>& pinned,
                             const CutConfig& cfg) {
  if (a.size() > cfg.max_tiles) throw SizeLimitExceeded(a.size(), cfg.max_tiles);
  if (a.size() < 2) return Rat::infinity();
  BondGraph g = bond_graph(a);
  DSU dsu(g.n);
  for (const auto& e : g.edges)
    if (e.weight.is_infinite()) dsu.unite(e.a, e.b);
  for (std::size_t k = 1; k < pinned.size(); ++k) dsu.unite(pinned[0], pinned[k]);
  return search_min(quotient(a, g, dsu));
}

std::vector<Combination> enumerate_combinations(const Assembly& a, const Assembly& b) {
  std::vector<Combination> out;
  if (a.empty() || b.empty()) return out;
  // Candidate translations align each glue of b across a matching glue of
  // a. A combination with crossing >= 1 has at least one positive matched
  // pair, so this candidate set is complete.
  std::set<std::pair<int, int>> candidates;
  for (const auto& pa : a.tiles()) {
    for (Dir d : {Dir::N, Dir::E, Dir::S, Dir::W}) {
      const auto& ga = pa.tile.at(d);
      if (!ga) continue;
      Coord facing = step(pa.pos, d);
      for (const auto& pb : b.tiles()) {
        const auto& gb = pb.tile.at(opposite(d));
        if (!gb || gb->id != ga->id) continue;
        candidates.insert({facing.x - pb.pos.x, facing.y - pb.pos.y});
      }
    }
  }
  for (auto [dx, dy] : candidates) {
    if (overlaps(a, b, dx, dy)) continue;
    Rat w = crossing_strength(a, b, dx, dy);
    if (w >= Rat(1)) out.push_back({a.merged(b, dx, dy), w, dx, dy});
  }
  std::sort(out.begin(), out.end(), [](const Combination& l, const Combination& r) {
    if (l.result != r.result) return l.result < r.result;
    return std::make_pair(l.dx, l.dy) < std::make_pair(r.dx, r.dy);
  });
  return out;
}

}  // namespace negasm
