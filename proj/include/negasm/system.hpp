#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negasm/model.hpp"

namespace negasm {

struct Bounds {
  std::size_t max_assembly_size = 64;
  std::size_t max_producibles = 20000;
  std::size_t max_depth = 10000;
};

// A set of initial assemblies plus exploration bounds. The focus label
// marks the persistent piece tracked through breaks.
struct AssemblySystem {
  std::vector<Assembly> initial;  // canonical, sorted, deduplicated
  Bounds bounds;
  std::string focus_label;

  void add(const Assembly& a);
  void normalize();  // sort + dedupe
};

}  // namespace negasm
