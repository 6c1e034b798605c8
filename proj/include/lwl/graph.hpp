#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lwl {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Simple undirected graph on vertices 0..n-1 with integer vertex colors (all zero by default).
///
/// Adjacency is held twice: as bitset rows for intersection-heavy kernels (codegree, triangles,
/// induced checks) and as sorted neighbor lists for iteration. Immutable once built.
class Graph {
  public:
    Graph() = default;

    /// Builds from an edge list. Duplicate and reversed edges collapse; self-loops and
    /// out-of-range endpoints throw InputError. `colors` is empty or has exactly n entries.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors = {});

    std::size_t n() const noexcept { return neighbors_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return neighbors_[v]; }
    std::size_t degree(Vertex v) const noexcept { return neighbors_[v].size(); }

    /// Bitset row of v: bit u of word u/64 is set iff u ~ v.
    std::span<const std::uint64_t> row(Vertex v) const noexcept { return {bits_.data() + v * words_, words_}; }
    std::size_t words() const noexcept { return words_; }

    /// |N(u) ∩ N(v)|.
    std::size_t codegree(Vertex u, Vertex v) const noexcept;

    Color color(Vertex v) const noexcept { return colors_[v]; }
    std::span<const Color> colors() const noexcept { return colors_; }
    bool colored() const noexcept;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Induced subgraph; new vertex i is vertices[i]. Colors are carried over.
    Graph induced(std::span<const Vertex> vertices) const;
    Graph with_colors(std::vector<Color> colors) const;
    Graph complement() const;

    /// Vertex permutation: vertex v of *this becomes perm[v].
    Graph relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.neighbors_ == b.neighbors_ && a.colors_ == b.colors_;
    }

  private:
    std::size_t words_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::vector<Color> colors_;
};

/// Graph with a's vertices first, then b's shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Distance-colored r-hop neighborhood G_v^r.
///
/// Ball vertices are ordered by (distance, parent id), so the root is always ball vertex 0.
/// The subgraph's vertex colors are the distances from the root.
struct RootedBall {
    Vertex root = 0;
    std::size_t radius = 0;
    Graph subgraph;
    std::vector<std::uint32_t> distance;
    std::vector<Vertex> back_map;

    std::size_t layer_count() const noexcept { return distance.empty() ? 0 : distance.back() + 1; }
    /// Ball-local vertex ids at exact distance d.
    std::vector<Vertex> layer(std::uint32_t d) const;
};

/// BFS distances from v; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex v);

/// layers[i] = sorted vertices at distance exactly i from v.
std::vector<std::vector<Vertex>> bfs_layers(const Graph& g, Vertex v);

RootedBall extract_ball(const Graph& g, Vertex v, std::size_t r);

struct CenterInfo {
    std::size_t radius = 0;
    std::vector<Vertex> centers;
};

/// Radius and center set. Throws DomainError on a disconnected (or empty) graph.
CenterInfo eccentricity_center(const Graph& g);

bool is_connected(const Graph& g);

/// Largest finite eccentricity; nullopt when disconnected.
std::optional<std::size_t> diameter(const Graph& g);

}  // namespace lwl
