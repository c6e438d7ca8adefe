#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negasm/graph_compiler.hpp"
#include "negasm/system.hpp"

namespace negasm {

// Turing machine description. Symbols and states are strings; rules are
// 5-tuples (current state, scanned symbol, printed symbol, move, next state).
struct TMSpec {
  std::vector<std::string> states;
  std::vector<std::string> tape_alphabet;
  std::string blank;
  std::vector<std::string> input_alphabet;
  struct Rule {
    std::string state, read, write;
    char move = 'R';  // 'L' or 'R'
    std::string next;
  };
  std::vector<Rule> rules;
  std::string start;
  std::vector<std::string> finals;
  std::vector<std::string> tape;
  std::size_t head = 0;

  void validate() const;  // throws CompileError
};

TMSpec parse_tm_json(const std::string& text);

// A machine configuration with a finite, normalized tape.
struct Status {
  std::string state;
  std::vector<std::string> tape;
  std::size_t head = 0;

  std::string str() const;
  friend auto operator<=>(const Status&, const Status&) = default;
};

// Reference interpreter used as the oracle for acceptance tests. Extension
// appends a blank as an explicit step when the head must move past an
// edge; reduction clips a stateless blank edge cell after a move away.
// Returns the status sequence including the start status.
std::vector<Status> reference_tm_run(const TMSpec& m, std::size_t steps);

// Bounded slice of the configuration graph rooted at the start status.
struct ConfigGraphBounds {
  std::size_t max_statuses = 2000;
  std::size_t max_tape = 32;
};
DirectedGraphSpec configuration_graph(const TMSpec& m, const ConfigGraphBounds& b);

class TMCompiler {
 public:
  explicit TMCompiler(TMSpec m);

  AssemblySystem compile() const;

  // Per-pair tile set: the center pair, two detachment tiles, one attached
  // tile. q may be the empty state (stateless pair).
  static std::string pair_name(const std::string& q, const std::string& s);
  static const std::string kEmptyState;

  std::optional<Status> status_map(const Assembly& a) const;

  // Number of symbol-state tile sets the compiled system contains.
  std::size_t symbol_state_set_count() const;

  // Tape span (cell count) of a status, for the space report.
  static std::size_t span(const Status& s) { return s.tape.size(); }

  const TMSpec& machine() const { return tm_; }

  // --- construction pieces (exposed for tests) ---
  Assembly tape_cell() const;                       // free tape-cell assembly
  Assembly seam_tile() const;                        // extension enabler
  Assembly pair_left(const std::string& q, const std::string& s) const;
  Assembly pair_right(const std::string& q, const std::string& s) const;
  Assembly pair_attached(const std::string& q, const std::string& s) const;
  Assembly pair_detach(const std::string& q, const std::string& s, int which) const;
  Assembly transition_gadget(const TMSpec::Rule& r, const std::string& neighbor) const;
  Assembly transition_detach(const TMSpec::Rule& r, const std::string& neighbor,
                             int which) const;
  Assembly extension_gadget(const std::string& q, const std::string& s, bool right) const;
  Assembly extension_detach(const std::string& q, const std::string& s, bool right) const;
  Assembly reduction_gadget(bool right) const;
  Assembly reduction_extra(bool right) const;

  // The assembly representing a full status (pre-built tape with pairs).
  Assembly status_assembly(const Status& st) const;

 private:
  TMSpec tm_;
  std::vector<std::pair<std::string, std::string>> all_pairs() const;
};

}  // namespace negasm
