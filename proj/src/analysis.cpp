#include "negasm/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace negasm {

namespace {

// Focused transition graph over the explored producibles: nodes carrying
// the focus label, edges to the focused continuation(s) of each event.
struct FocusedGraph {
  std::vector<int> nodes;                  // producible ids
  std::map<int, int> index;                // producible id -> local id
  std::vector<std::vector<int>> out;       // local adjacency
  std::vector<std::optional<std::string>> status;  // f per local node
};

FocusedGraph build_focused(const ProducibleGraph& g, const std::string& focus,
                           const StatusMap& f) {
  FocusedGraph fg;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].has_label(focus)) {
      fg.index[static_cast<int>(i)] = static_cast<int>(fg.nodes.size());
      fg.nodes.push_back(static_cast<int>(i));
    }
  }
  fg.out.resize(fg.nodes.size());
  fg.status.resize(fg.nodes.size());
  for (std::size_t k = 0; k < fg.nodes.size(); ++k)
    fg.status[k] = f(g.nodes[fg.nodes[k]]);
  auto add = [&](int from, int to) {
    auto itf = fg.index.find(from);
    auto itt = fg.index.find(to);
    if (itf == fg.index.end() || itt == fg.index.end()) return;
    fg.out[itf->second].push_back(itt->second);
  };
  for (const auto& e : g.edges) {
    if (e.kind == EventKind::Combine) {
      add(e.from, e.result);
      if (e.partner >= 0) add(e.partner, e.result);
    } else {
      add(e.from, e.result);
      add(e.from, e.result_b);
    }
  }
  for (auto& v : fg.out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return fg;
}

// Nodes reachable from `seed` through f-undefined interior nodes; returns
// the set of visited undefined nodes plus the defined nodes first hit.
struct Closure {
  std::set<int> undefined_region;  // includes seed if undefined
  std::set<int> defined_frontier;  // first defined nodes reached
};

Closure undefined_closure(const FocusedGraph& fg, int seed) {
  Closure c;
  std::deque<int> q;
  std::set<int> seen;
  q.push_back(seed);
  seen.insert(seed);
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : fg.out[x]) {
      if (fg.status[y]) {
        c.defined_frontier.insert(y);
        continue;
      }
      if (seen.insert(y).second) {
        c.undefined_region.insert(y);
        q.push_back(y);
      }
    }
  }
  return c;
}

}  // namespace

WalkReport verify_walk(const AssemblySystem& system, const DirectedGraphSpec& graph,
                       const StatusMap& f, std::size_t depth, const CutConfig& cut) {
  WalkReport report;
  report.depth = depth;
  AssemblySystem bounded = system;
  bounded.bounds.max_depth = depth;
  ProducibleGraph g = explore(bounded, cut);
  report.bound_exhausted = g.bound_exhausted;

  FocusedGraph fg = build_focused(g, system.focus_label, f);
  std::set<std::pair<std::string, std::string>> edge_set(graph.edges.begin(),
                                                         graph.edges.end());

  // Nascent focused starts.
  std::vector<int> starts;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.initial[i] && g.nodes[i].has_label(system.focus_label)) {
      auto it = fg.index.find(static_cast<int>(i));
      if (it != fg.index.end()) starts.push_back(it->second);
    }

  // Reachable focused nodes (from nascent starts).
  std::set<int> reachable(starts.begin(), starts.end());
  std::deque<int> q(starts.begin(), starts.end());
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y : fg.out[x])
      if (reachable.insert(y).second) q.push_back(y);
  }

  // Condition 1: first defined status from a nascent start must be the
  // start vertex, and consecutive defined statuses must follow graph edges.
  for (int s : starts) {
    std::vector<int> first_defined;
    if (fg.status[s]) {
      first_defined.push_back(s);
    } else {
      auto c = undefined_closure(fg, s);
      first_defined.assign(c.defined_frontier.begin(), c.defined_frontier.end());
    }
    for (int x : first_defined) {
      if (*fg.status[x] != graph.start) {
        report.condition1 = false;
        report.violations.push_back("nascent sequence reaches status " + *fg.status[x] +
                                    " before start vertex " + graph.start);
      }
    }
  }
  for (int x : reachable) {
    if (!fg.status[x]) continue;
    auto c = undefined_closure(fg, x);
    for (int y : c.defined_frontier) {
      // A defined node directly following x (through undefined interiors).
      if (!edge_set.count({*fg.status[x], *fg.status[y]})) {
        report.condition1 = false;
        report.violations.push_back("projection step " + *fg.status[x] + " -> " +
                                    *fg.status[y] + " is not a graph edge");
      }
    }
  }

  // Condition 3: from every node in the undefined closure after a defined
  // node with status u (including the u node itself), every graph edge
  // (u,v) has a continuation reaching a v node.
  for (int x : reachable) {
    if (!fg.status[x]) continue;
    const std::string& u = *fg.status[x];
    auto c = undefined_closure(fg, x);
    std::vector<int> region(c.undefined_region.begin(), c.undefined_region.end());
    region.push_back(x);
    for (const auto& [eu, ev] : graph.edges) {
      if (eu != u) continue;
      for (int z : region) {
        auto cz = (z == x) ? c : undefined_closure(fg, z);
        bool hit = false;
        for (int w : cz.defined_frontier)
          if (*fg.status[w] == ev) {
            hit = true;
            break;
          }
        if (!hit) {
          report.condition3 = false;
          report.violations.push_back("dead end: from a sequence projecting to <" + u +
                                      "> the edge (" + u + "," + ev +
                                      ") cannot be completed");
        }
      }
    }
  }

  // Condition 2: the start status must be realized; with condition 3
  // holding at every reachable defined node, every walk unrolls inductively.
  bool start_realized = false;
  for (int s : starts) {
    if (fg.status[s] && *fg.status[s] == graph.start) start_realized = true;
    if (!fg.status[s]) {
      auto c = undefined_closure(fg, s);
      for (int y : c.defined_frontier)
        if (*fg.status[y] == graph.start) start_realized = true;
    }
  }
  if (!start_realized) {
    report.condition2 = false;
    report.violations.push_back("start vertex " + graph.start + " is never realized");
  }
  // Direct witness enumeration for walks up to the requested depth
  // (cap the count; realizability follows the per-edge witnesses).
  if (report.condition3 && start_realized) {
    std::size_t budget = 200000;
    std::size_t count = 0;
    std::vector<std::pair<std::string, std::size_t>> stack{{graph.start, 0}};
    while (!stack.empty() && budget > 0) {
      auto [v, len] = stack.back();
      stack.pop_back();
      --budget;
      ++count;
      if (len >= depth) continue;
      for (const auto& [eu, ev] : graph.edges)
        if (eu == v) stack.push_back({ev, len + 1});
    }
    report.walks_checked = count;
  } else if (!report.condition3) {
    report.condition2 = false;  // a missing edge witness breaks realization
  }
  return report;
}

MilestoneReport check_cut_milestones(const std::vector<Assembly>& stages,
                                     const std::vector<MilestoneCheck>& checks,
                                     const CutConfig& cut) {
  MilestoneReport rep;
  auto fail = [&](const MilestoneCheck& c, const std::string& why) {
    rep.pass = false;
    rep.lines.push_back("FAIL " + c.name + ": " + why);
  };
  auto ok = [&](const MilestoneCheck& c, const std::string& what) {
    rep.lines.push_back("ok   " + c.name + ": " + what);
  };
  for (const auto& c : checks) {
    if (c.stage < 0 || c.stage >= static_cast<int>(stages.size())) {
      fail(c, "stage index out of range");
      continue;
    }
    const Assembly& a = stages[c.stage];
    auto labeled = [&](const PlacedTile& pt) {
      return std::find(c.labels.begin(), c.labels.end(), pt.tile.label) != c.labels.end();
    };
    switch (c.kind) {
      case MilestoneCheck::Kind::UniqueBreakWeight: {
        auto breaks = enumerate_breaks(a, cut);
        if (breaks.size() != 1) {
          fail(c, "expected exactly one cut below 1, found " +
                      std::to_string(breaks.size()));
          break;
        }
        if (!(breaks[0].cut.weight == c.value)) {
          fail(c, "unique cut weighs " + breaks[0].cut.weight.str() + ", expected " +
                      c.value.str());
          break;
        }
        ok(c, "unique break at " + c.value.str());
        break;
      }
      case MilestoneCheck::Kind::PieceCutWeight: {
        std::vector<char> side(a.size(), 0);
        std::size_t marked = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (labeled(a[i])) {
            side[i] = 1;
            ++marked;
          }
        if (marked == 0 || marked == a.size()) {
          fail(c, "piece selector matches nothing or everything");
          break;
        }
        Rat w = cut_weight(a, side);
        if (!(w == c.value)) {
          fail(c, "piece cut weighs " + w.str() + ", expected " + c.value.str());
          break;
        }
        ok(c, "piece cut = " + c.value.str());
        break;
      }
      case MilestoneCheck::Kind::SameSideMinAtLeast: {
        std::vector<int> pinned;
        for (std::size_t i = 0; i < a.size(); ++i)
          if (labeled(a[i])) pinned.push_back(static_cast<int>(i));
        if (pinned.size() < 2) {
          fail(c, "same-side selector needs at least two tiles");
          break;
        }
        Rat w = min_cut_weight_same_side(a, pinned, cut);
        if (w < c.value) {
          fail(c, "same-side min cut " + w.str() + " below " + c.value.str());
          break;
        }
        ok(c, "same-side min cut " + w.str() + " >= " + c.value.str());
        break;
      }
      case MilestoneCheck::Kind::MinCutAtLeast: {
        Rat w = min_cut_weight(a, cut);
        if (w < c.value) {
          fail(c, "min cut " + w.str() + " below " + c.value.str());
          break;
        }
        ok(c, "min cut " + w.str() + " >= " + c.value.str());
        break;
      }
    }
  }
  return rep;
}

FuelReport fuel_report(const std::vector<Assembly>& seq, const StatusMap& f) {
  FuelReport rep;
  if (seq.empty()) return rep;
  long acc = 0;
  bool seen_defined = f(seq.front()).has_value();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    long d = fuel_step(seq[i], seq[i + 1]);
    acc += d;
    rep.total += d;
    if (f(seq[i + 1])) {
      if (seen_defined) rep.per_transition.push_back(acc);
      acc = 0;
      seen_defined = true;
    }
  }
  rep.projected_length = project(seq, f).size();
  if (!rep.per_transition.empty()) {
    rep.constant_value = rep.per_transition.front();
    for (long v : rep.per_transition)
      if (v != rep.constant_value) rep.constant_after_first = false;
  }
  return rep;
}

SpaceReport space_report(const std::vector<Assembly>& seq, const StatusMap& f,
                         const std::map<std::string, std::size_t>& span_of_status) {
  SpaceReport rep;
  for (const auto& a : seq) {
    rep.max_assembly_size = std::max(rep.max_assembly_size, a.size());
    auto s = f(a);
    if (!s) continue;
    std::size_t span = 0;
    auto it = span_of_status.find(*s);
    if (it != span_of_status.end()) span = it->second;
    rep.rows.push_back({a.size(), span, *s});
  }
  return rep;
}

}  // namespace negasm
