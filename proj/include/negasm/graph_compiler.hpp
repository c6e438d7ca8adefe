#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "negasm/system.hpp"

namespace negasm {

struct CompileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DirectedGraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string start;

  void validate() const;  // throws CompileError
};

DirectedGraphSpec parse_graph_json(const std::string& text);
DirectedGraphSpec parse_graph_text(const std::string& text);  // "u -> v" lines
DirectedGraphSpec quaternary_oscillator();                    // built-in 4-cycle

// Fixed realization of the graph-walking template. All strengths are
// denominator-8 rationals engineered so the correctness-cut milestones
// hold under exhaustive cut enumeration (see tests/test_graph_compiler).
struct GadgetPlan {
  // shared cell glue strengths, in eighths
  static constexpr int kE6 = 6;    // gadget attach glue on the left tower
  static constexpr int kW1 = 1;    // detach-tile side grip
  static constexpr int kWS = 3;    // detach-tile bottom grip
  static constexpr int kC = 3;     // socket left
  static constexpr int kD = 4;     // socket right (the 4/8 grip)
  static constexpr int kWA = 2;    // attached-tile bottom grip
  static constexpr int kN5 = -5;   // pry-off glue (two faces)
  // per-vertex strengths
  static constexpr int kPrime = -3;  // detach tile vs left vertex tile
  static constexpr int kDot = 6;     // pair bond
  static constexpr int kStar = 4;    // incoming right-tile hold
  static constexpr int kPlus = 1;    // gadget attach trigger on the left tile
  static constexpr int kA = 6;       // right tile vs attached tile
  static constexpr int kAzk = 2;     // attached tile vs edge detachment tile
  static constexpr int kDet = 7;     // detach tile vs gadget
  static constexpr int kWB = 1;      // attached tile top grip (shared)
  // per-edge
  static constexpr int kZ = 17;  // edge detachment tile vs gadget
};

class GraphCompiler {
 public:
  explicit GraphCompiler(DirectedGraphSpec g);

  AssemblySystem compile() const;

  // Piece builders (relative coordinates; canonicalized on construction).
  Assembly cell_assembly() const;                       // bare backbone
  Assembly quiescent(const std::string& v) const;       // cell + pair + attached tile
  Assembly vertex_left(const std::string& v) const;     // singleton
  Assembly vertex_right(const std::string& v) const;    // singleton
  Assembly attached_tile(const std::string& v) const;   // singleton
  Assembly detach_tile(const std::string& v) const;     // singleton
  Assembly edge_gadget(const std::string& u, const std::string& v) const;
  Assembly edge_detach_tile(const std::string& u, const std::string& v) const;

  // Canonical stage templates for the u->v transition. The realized
  // pipeline has ten stages; the paper's stage 3 maps to index 2 and its
  // pre-detachment stage 8 to index 8 (see kStage3 / kStagePreEject).
  std::vector<Assembly> transition_stages(const std::string& u,
                                          const std::string& v) const;
  static constexpr int kStage3 = 2;        // both vertex tiles + gadget + detach tile
  static constexpr int kStagePreEject = 8; // everything attached, one cut below 1

  // Partial map PROD -> V: defined exactly on quiescent assemblies.
  std::optional<std::string> status_map(const Assembly& a) const;

  // Fuel tiles consumed per transition by this realization.
  static constexpr long kFuelPerTransition = 10;

  const DirectedGraphSpec& graph() const { return graph_; }

 private:
  DirectedGraphSpec graph_;
};

}  // namespace negasm
