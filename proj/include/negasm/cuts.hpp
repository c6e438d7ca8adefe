#pragma once

#include <stdexcept>
#include <vector>

#include "negasm/model.hpp"

namespace negasm {

struct SizeLimitExceeded : std::runtime_error {
  explicit SizeLimitExceeded(std::size_t n, std::size_t limit)
      : std::runtime_error("assembly of " + std::to_string(n) +
                           " tiles exceeds cut-search bound " + std::to_string(limit)) {}
};

struct CutConfig {
  std::size_t max_tiles = 28;  // exhaustive-search bound; NEGASM_MAX_CUT_TILES overrides
};

CutConfig default_cut_config();

// One bipartition of an assembly's tiles into nonempty sides.
struct Cut {
  std::vector<char> side;  // per tile index: 0 or 1
  Rat weight;              // total bond weight crossing the partition
};

struct Break {
  Assembly piece_a;  // side 0, re-canonicalized
  Assembly piece_b;  // side 1
  Cut cut;
};

struct Combination {
  Assembly result;
  Rat crossing;  // bond strength across the two halves (>= 1)
  int dx = 0;    // translation applied to b
  int dy = 0;
};

// Minimum cut weight over all bipartitions; infinite for singletons
// (no cut exists). Negative edges force exhaustive search: branch and
// bound over bipartitions after contracting infinite bonds.
Rat min_cut_weight(const Assembly& a, const CutConfig& cfg = default_cut_config());

// Connected and min cut >= 1.
bool is_stable(const Assembly& a, const CutConfig& cfg = default_cut_config());

// Every bipartition with crossing weight < 1. Sides may be disconnected;
// they are valid (possibly further breakable) assemblies.
std::vector<Break> enumerate_breaks(const Assembly& a,
                                    const CutConfig& cfg = default_cut_config());

// Every translation of b against a with at least one matching facing glue
// pair, no overlap, and total crossing strength >= 1.
std::vector<Combination> enumerate_combinations(const Assembly& a, const Assembly& b);

// Weight of a specific bipartition (testing / milestone checks).
Rat cut_weight(const Assembly& a, const std::vector<char>& side);

// Minimum cut weight over bipartitions that keep every tile listed in
// `pinned_together` on the same side (used for the same-side milestone).
Rat min_cut_weight_same_side(const Assembly& a, const std::vector<int>& pinned_together,
                             const CutConfig& cfg = default_cut_config());

}  // namespace negasm
