#pragma once

#include <string>
#include <vector>

#include "dimerlab/quiver.hpp"

namespace dimerlab {

struct RenderOptions {
    std::vector<ArrowId> highlight_matching;    // drawn thick blue
    std::vector<ArrowId> highlight_contracted;  // drawn green
    std::vector<ArrowId> highlight_path;        // drawn red
    int size = 360;                             // pixel edge of the fundamental domain
};

// Fundamental-domain square with wrap-around arrows split at the boundary.
// Byte-deterministic for fixed input.
std::string render_svg(const DimerQuiver& q, const RenderOptions& opts = {});

}  // namespace dimerlab
