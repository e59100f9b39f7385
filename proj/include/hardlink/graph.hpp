#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hardlink {

// Finite multigraph; loops and parallel edges allowed. Vertices 0-based
// internally, 1-based in the text format.
struct FiniteGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Text format: first line the vertex count, then one "u v" pair per line.
FiniteGraph parse_graph(const std::string& text);
std::string format_graph(const FiniteGraph& g);

}  // namespace hardlink
