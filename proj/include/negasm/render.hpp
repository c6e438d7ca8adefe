#pragma once

#include <string>
#include <vector>

#include "negasm/model.hpp"

namespace negasm {

// Deterministic SVG: tiles as squares with labels, glue ids and strengths
// on the faces; negative glues drawn dashed.
std::string render_svg(const Assembly& a, const std::string& title = "");
std::string render_svg_frames(const std::vector<Assembly>& frames,
                              const std::vector<std::string>& titles);

// Compact fixed-width text rendering (one character cell per tile).
std::string render_ascii(const Assembly& a);

}  // namespace negasm
