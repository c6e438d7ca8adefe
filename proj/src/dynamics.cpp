#include "negasm/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace negasm {

int ProducibleGraph::find(const Assembly& a) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), a);
  if (it != nodes.end() && *it == a) return static_cast<int>(it - nodes.begin());
  return -1;
}

namespace {

struct Explorer {
  const AssemblySystem& system;
  const CutConfig& cut;
  std::map<Assembly, int> ids;
  std::vector<Assembly> order;  // insertion order
  std::vector<char> truncated;
  std::vector<int> witness;  // provisional: edge index into edges
  std::vector<ProducibleGraph::Edge> edges;
  bool exhausted = false;

  explicit Explorer(const AssemblySystem& s, const CutConfig& c) : system(s), cut(c) {}

  int intern(const Assembly& a, int witness_edge) {
    auto it = ids.find(a);
    if (it != ids.end()) return it->second;
    if (order.size() >= system.bounds.max_producibles) {
      exhausted = true;
      return -1;
    }
    int id = static_cast<int>(order.size());
    ids.emplace(a, id);
    order.push_back(a);
    truncated.push_back(0);
    witness.push_back(witness_edge);
    return id;
  }

  void run() {
    for (const auto& a : system.initial) intern(a, -1);
    std::size_t processed = 0;
    std::size_t depth = 0;
    while (processed < order.size() && depth < system.bounds.max_depth) {
      std::size_t round_end = order.size();
      // Deterministic order within the round: by canonical comparison.
      std::vector<int> frontier;
      for (std::size_t i = processed; i < round_end; ++i)
        frontier.push_back(static_cast<int>(i));
      std::sort(frontier.begin(), frontier.end(),
                [&](int l, int r) { return order[l] < order[r]; });
      for (int idx : frontier) expand(idx);
      processed = round_end;
      ++depth;
    }
    if (processed < order.size()) {
      exhausted = true;
      for (std::size_t i = processed; i < order.size(); ++i) truncated[i] = 1;
    }
  }

  void expand(int idx) {
    Assembly a = order[idx];
    // Breaks.
    if (a.size() <= cut.max_tiles) {
      for (const auto& br : enumerate_breaks(a, cut)) {
        int ia = intern(br.piece_a, -2);
        int ib = intern(br.piece_b, -2);
        if (ia < 0 || ib < 0) {
          truncated[idx] = 1;
          continue;
        }
        ProducibleGraph::Edge e;
        e.from = idx;
        e.kind = EventKind::Break;
        e.result = ia;
        e.result_b = ib;
        int ei = static_cast<int>(edges.size());
        edges.push_back(e);
        if (witness[ia] == -2) witness[ia] = ei;
        if (witness[ib] == -2) witness[ib] = ei;
      }
    } else {
      truncated[idx] = 1;
    }
    // Combinations with every node of index <= idx; later nodes pair with
    // this one when they are expanded, covering each unordered pair once.
    for (int j = 0; j <= idx; ++j) {
      Assembly b = order[j];
      for (const auto& comb : enumerate_combinations(a, b)) {
        if (comb.result.size() > system.bounds.max_assembly_size) {
          truncated[idx] = 1;
          continue;
        }
        int ir = intern(comb.result, -2);
        if (ir < 0) {
          truncated[idx] = 1;
          continue;
        }
        ProducibleGraph::Edge e;
        e.from = idx;
        e.kind = EventKind::Combine;
        e.partner = static_cast<int>(j);
        e.result = ir;
        int ei = static_cast<int>(edges.size());
        edges.push_back(e);
        if (witness[ir] == -2) witness[ir] = ei;
      }
    }
  }
};

}  // namespace

ProducibleGraph explore(const AssemblySystem& system, const CutConfig& cut) {
  Explorer ex(system, cut);
  ex.run();

  ProducibleGraph g;
  // Re-sort nodes canonically; remap ids.
  std::vector<int> perm(ex.order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int l, int r) { return ex.order[l] < ex.order[r]; });
  std::vector<int> newid(ex.order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) newid[perm[i]] = static_cast<int>(i);
  g.nodes.resize(ex.order.size());
  g.truncated.resize(ex.order.size());
  g.witness_parent.assign(ex.order.size(), -1);
  for (std::size_t i = 0; i < ex.order.size(); ++i) {
    g.nodes[newid[i]] = ex.order[i];
    g.truncated[newid[i]] = ex.truncated[i];
  }
  g.edges.reserve(ex.edges.size());
  for (const auto& e : ex.edges) {
    ProducibleGraph::Edge ne = e;
    ne.from = newid[e.from];
    if (e.partner >= 0) ne.partner = newid[e.partner];
    if (e.result >= 0) ne.result = newid[e.result];
    if (e.result_b >= 0) ne.result_b = newid[e.result_b];
    g.edges.push_back(ne);
  }
  for (std::size_t i = 0; i < ex.order.size(); ++i) {
    int w = ex.witness[i];
    g.witness_parent[newid[i]] = (w >= 0) ? w : -1;
  }
  // remap witness edge indices: edges kept in discovery order, so indices
  // remain valid; they now reference g.edges directly.
  g.initial.assign(g.nodes.size(), 0);
  for (const auto& a : system.initial) {
    int id = g.find(a);
    if (id >= 0) g.initial[id] = 1;
  }
  // Terminal: no outgoing break, and no combination as either operand.
  std::vector<char> active(g.nodes.size(), 0);
  for (const auto& e : g.edges) {
    active[e.from] = 1;
    if (e.kind == EventKind::Combine && e.partner >= 0) active[e.partner] = 1;
  }
  g.terminal.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) g.terminal[i] = !active[i];
  g.bound_exhausted = ex.exhausted;
  return g;
}

std::vector<TraceEvent> successors(const Assembly& a, const std::vector<Assembly>& pool,
                                   const CutConfig& cut) {
  std::vector<TraceEvent> out;
  for (const auto& br : enumerate_breaks(a, cut)) {
    TraceEvent e1;
    e1.kind = EventKind::Break;
    e1.before = a;
    e1.result = br.piece_a;
    e1.other = br.piece_b;
    e1.fuel_delta = 0;
    out.push_back(e1);
    std::swap(e1.result, e1.other);
    out.push_back(e1);
  }
  for (const auto& b : pool) {
    for (const auto& comb : enumerate_combinations(a, b)) {
      TraceEvent e;
      e.kind = EventKind::Combine;
      e.before = a;
      e.result = comb.result;
      e.other = b;
      e.fuel_delta = fuel_step(a, comb.result);
      out.push_back(e);
    }
  }
  return out;
}

long fuel_step(const Assembly& before, const Assembly& after) {
  long d = static_cast<long>(after.size()) - static_cast<long>(before.size());
  return d > 0 ? d : 0;
}

long fuel_of_sequence(const std::vector<Assembly>& seq) {
  long total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    total += fuel_step(seq[i], seq[i + 1]);
  return total;
}

std::vector<std::string> project(const std::vector<Assembly>& seq, const StatusMap& f) {
  std::vector<std::string> out;
  for (const auto& a : seq) {
    auto s = f(a);
    if (s) out.push_back(*s);
  }
  return out;
}

FocusedRun run_focused(const AssemblySystem& system, const RunOptions& opt,
                       const CutConfig& cut) {
  std::string focus = opt.focus_label.empty() ? system.focus_label : opt.focus_label;
  FocusedRun run;
  const Assembly* start = nullptr;
  for (const auto& a : system.initial)
    if (a.has_label(focus)) {
      start = &a;
      break;
    }
  if (!start) throw std::runtime_error("NoFocusedTile: no initial assembly carries " + focus);
  std::mt19937_64 rng(opt.seed);
  Assembly current = *start;
  run.sequence.push_back(current);
  for (std::size_t step = 0; step < opt.max_events; ++step) {
    std::vector<TraceEvent> events = successors(current, system.initial, cut);
    // Keep only focused continuations.
    std::vector<TraceEvent> focused;
    for (auto& e : events)
      if (e.result.has_label(focus)) focused.push_back(std::move(e));
    if (focused.empty()) break;
    // On ties the larger continuation is preferred so breaks follow the
    // marked piece; the remaining order is canonical for reproducibility.
    std::sort(focused.begin(), focused.end(), [](const TraceEvent& l, const TraceEvent& r) {
      if (l.result.size() != r.result.size()) return l.result.size() > r.result.size();
      if (l.result != r.result) return l.result < r.result;
      return l.other < r.other;
    });
    // Deduplicate identical results.
    focused.erase(std::unique(focused.begin(), focused.end(),
                              [](const TraceEvent& l, const TraceEvent& r) {
                                return l.result == r.result && l.other == r.other &&
                                       l.kind == r.kind;
                              }),
                  focused.end());
    std::uniform_int_distribution<std::size_t> pick(0, focused.size() - 1);
    TraceEvent chosen = focused[pick(rng)];
    current = chosen.result;
    run.sequence.push_back(current);
    run.events.push_back(std::move(chosen));
  }
  return run;
}

}  // namespace negasm
