#pragma once

#include <cstddef>

#include "lwl/graph.hpp"

// Named small graphs used by the pattern library, the golden corpus, and the tests.
namespace lwl::families {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// K_{1,s}; the center is vertex 0.
Graph star(std::size_t s);
/// Triangle 0-1-2 with pendant 3 attached to 0.
Graph paw();
/// K4 minus the edge {2,3}; vertices 0 and 1 have degree 3.
Graph diamond();
/// Two disjoint edges {0,1}, {2,3}.
Graph matching2();
Graph petersen();
/// copies disjoint copies of g.
Graph repeat(const Graph& g, std::size_t copies);

}  // namespace lwl::families
