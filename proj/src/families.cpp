#include "lwl/families.hpp"

#include <vector>

namespace lwl::families {

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph star(std::size_t s) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= s; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(s + 1, edges);
}

Graph paw() {
    const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    return Graph::from_edges(4, edges);
}

Graph diamond() {
    const Edge edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return Graph::from_edges(4, edges);
}

Graph matching2() {
    const Edge edges[] = {{0, 1}, {2, 3}};
    return Graph::from_edges(4, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

Graph repeat(const Graph& g, std::size_t copies) {
    Graph out = empty(0);
    for (std::size_t i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

}  // namespace lwl::families
