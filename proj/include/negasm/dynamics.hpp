#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "negasm/cuts.hpp"
#include "negasm/system.hpp"

namespace negasm {

// Partial function PROD -> status labels.
using StatusMap = std::function<std::optional<std::string>(const Assembly&)>;

enum class EventKind { Combine, Break };

// One combination or break step applied to a tracked assembly.
struct TraceEvent {
  EventKind kind = EventKind::Combine;
  Assembly before;
  Assembly result;   // the tracked continuation
  Assembly other;    // combine partner, or the piece that went the other way
  long fuel_delta = 0;  // max(0, |result| - |before|)
  std::optional<std::string> mapped;  // f(result) if defined
};

struct ProducibleGraph {
  struct Edge {
    int from = -1;
    EventKind kind = EventKind::Combine;
    int partner = -1;  // combine: other operand (node id)
    int result = -1;   // combine: union; break: piece a
    int result_b = -1; // break: piece b
  };
  std::vector<Assembly> nodes;  // sorted canonical order
  std::vector<Edge> edges;
  std::vector<char> initial;    // per node
  std::vector<char> terminal;   // no break and no combination with any node
  std::vector<char> truncated;  // expansion stopped by bounds at this node
  std::vector<int> witness_parent;  // edge index that first produced the node, -1 initial
  bool bound_exhausted = false;

  int find(const Assembly& a) const;
};

// Closure of the initial set under combinations and breaks, bounded.
ProducibleGraph explore(const AssemblySystem& system,
                        const CutConfig& cut = default_cut_config());

// Single-step view: all combinations of a with pool members plus all breaks.
std::vector<TraceEvent> successors(const Assembly& a, const std::vector<Assembly>& pool,
                                   const CutConfig& cut = default_cut_config());

// fuel(a,b) = |b| - |a| when growing, else 0; fuel of a sequence is the sum.
long fuel_step(const Assembly& before, const Assembly& after);
long fuel_of_sequence(const std::vector<Assembly>& seq);

// f' projection: map each element through f, dropping undefined entries;
// consecutive duplicates are kept.
std::vector<std::string> project(const std::vector<Assembly>& seq, const StatusMap& f);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t max_events = 1000;
  std::string focus_label;
};

// One l-focused nascent sequence: seeded uniform choice among enabled
// events; on a break, follows a piece carrying the focus label (larger
// piece first, canonical order tie-break).
struct FocusedRun {
  std::vector<Assembly> sequence;  // starts at the focused initial assembly
  std::vector<TraceEvent> events;
  bool nascent = true;
};

FocusedRun run_focused(const AssemblySystem& system, const RunOptions& opt,
                       const CutConfig& cut = default_cut_config());

}  // namespace negasm
