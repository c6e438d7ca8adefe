#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negasm/dynamics.hpp"
#include "negasm/graph_compiler.hpp"

namespace negasm {

// Graph-walking verification, bounded by the exploration depth.
struct WalkReport {
  bool condition1 = true;  // assembly sequences are walks
  bool condition2 = true;  // walks are assembly sequences
  bool condition3 = true;  // no undesired dead-ends
  std::size_t depth = 0;
  bool bound_exhausted = false;
  std::size_t walks_checked = 0;       // condition-2 witness coverage
  std::vector<std::string> violations; // human-readable counterexamples
  bool pass() const { return condition1 && condition2 && condition3; }
};

WalkReport verify_walk(const AssemblySystem& system, const DirectedGraphSpec& graph,
                       const StatusMap& f, std::size_t depth,
                       const CutConfig& cut = default_cut_config());

// Cut-weight milestone assertions over stage assemblies.
struct MilestoneCheck {
  enum class Kind {
    UniqueBreakWeight,   // exactly one bipartition below 1, at exactly `value`
    PieceCutWeight,      // the cut isolating tiles with the given labels weighs `value`
    SameSideMinAtLeast,  // min cut keeping labeled tiles together is >= `value`
    MinCutAtLeast,       // plain min cut >= `value`
  };
  Kind kind;
  int stage = 0;
  std::vector<std::string> labels;  // tile labels selecting a piece / pinned set
  Rat value;
  std::string name;
};

struct MilestoneReport {
  bool pass = true;
  std::vector<std::string> lines;  // one per check: "ok ..." / "FAIL ..."
};

MilestoneReport check_cut_milestones(const std::vector<Assembly>& stages,
                                     const std::vector<MilestoneCheck>& checks,
                                     const CutConfig& cut = default_cut_config());

// Fuel accounting along a focused sequence, split at f-defined points.
struct FuelReport {
  std::vector<long> per_transition;
  long total = 0;
  std::size_t projected_length = 0;
  bool constant_after_first = true;
  long constant_value = 0;
};

FuelReport fuel_report(const std::vector<Assembly>& seq, const StatusMap& f);

// Assembly size against tape span, per projected status.
struct SpaceReport {
  struct Row {
    std::size_t assembly_size;
    std::size_t span;  // tape-span supplied by the caller per status
    std::string status;
  };
  std::vector<Row> rows;
  std::size_t max_assembly_size = 0;
};

SpaceReport space_report(const std::vector<Assembly>& seq, const StatusMap& f,
                         const std::map<std::string, std::size_t>& span_of_status);

}  // namespace negasm
