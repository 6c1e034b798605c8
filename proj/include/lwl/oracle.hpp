#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/pattern.hpp"

namespace lwl::oracle {

/// Work limits for the brute-force routines. Exceeding one throws CapacityError.
struct Budget {
    /// Upper bound on (vertex subsets) x (bijections) examined by count().
    std::uint64_t max_placements = 50'000'000;
    /// Upper bound on partial maps explored by hom_count() and iso().
    std::uint64_t max_nodes = 100'000'000;
};

/// Copies of p in g by enumerating every |V(p)|-subset. Induced mode counts subsets that induce a
/// graph isomorphic to p. Subgraph mode counts distinct (vertex set, edge set) copies. Vertex
/// colors are ignored.
std::uint64_t count(const Graph& g, const Graph& p, CountMode mode, const Budget& budget = {});
std::uint64_t count(const Graph& g, const Pattern& p, CountMode mode, const Budget& budget = {});

inline constexpr std::size_t kMaxHomSource = 6;

/// Edge-preserving maps V(h) -> V(g), not necessarily injective.
std::uint64_t hom_count(const Graph& h, const Graph& g, const Budget& budget = {});

/// Homomorphic images of h reached by repeatedly identifying two non-adjacent vertices, including h,
/// pairwise non-isomorphic. Ordered by vertex count (descending), then edge count, then discovery.
std::vector<Graph> spasm(const Graph& h);

enum class IsoMethod { Exhaustive, Backtracking };

struct IsoCertificate {
    bool isomorphic = false;
    IsoMethod method = IsoMethod::Backtracking;
    /// witness[v] is the image in g2 of vertex v of g1.
    std::optional<std::vector<Vertex>> witness;
};

inline constexpr std::size_t kMaxExhaustiveIso = 10;

/// Isomorphism test honoring vertex colors. Backtracking prunes by (color, degree, neighbor degree
/// multiset); exhaustive tries all permutations and is limited to 10 vertices.
IsoCertificate iso(const Graph& g1, const Graph& g2, IsoMethod method = IsoMethod::Backtracking,
                   const Budget& budget = {});

/// True when `map` is a bijection V(a) -> V(b) preserving adjacency, non-adjacency and colors.
bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map);

}  // namespace lwl::oracle
