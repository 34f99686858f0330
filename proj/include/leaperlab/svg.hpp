#pragma once

#include <string>
#include <vector>

#include "leaperlab/graph.hpp"

namespace leaperlab {

enum class RenderMode { Plain, Components, Angular, Clovers, Walk };

struct RenderOptions {
    RenderMode mode = RenderMode::Plain;
    std::vector<Cell> walk;       // for RenderMode::Walk
    int cell_px = 28;
    int max_side = 120;           // pixel-budget guard on board sides
};

struct RenderResult {
    std::string svg;
    int groups = 0;  // stroke groups emitted (components, angular comps, classes)
};

// Deterministic diagram of the complete graph of l on the standard m x n
// board: grid, vertices, edges; y axis points up.
RenderResult render_board(const Leaper& l, int m, int n, const RenderOptions& opts);

}  // namespace leaperlab
