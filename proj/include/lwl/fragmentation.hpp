#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/parallel.hpp"

namespace lwl {

/// The 17 graphs on 2 to 4 vertices up to isomorphism. Names match the pattern library.
enum class SmallPatternId : std::uint8_t {
    Nonedge,
    Edge,
    Empty3,
    EdgeIso,
    P3,
    Triangle,
    Empty4,
    Edge2Iso,
    Matching2,
    P3Iso,
    TriangleIso,
    P4,
    Star3,
    Paw,
    C4,
    Diamond,
    K4,
};

inline constexpr std::size_t kSmallPatternCount = 17;

std::string_view name_of(SmallPatternId id);
std::optional<SmallPatternId> small_pattern_from_name(std::string_view name);
std::size_t vertex_count(SmallPatternId id);
/// Row label of the size-<=4 fragmentation table ("G1" ... "G17").
std::string_view table_row(SmallPatternId id);
/// The complement pattern (same vertex count).
SmallPatternId complement_of(SmallPatternId id);
std::array<SmallPatternId, kSmallPatternCount> all_small_patterns();

/// Counts a root can compute from its own neighborhood, its distance-2 layer, and the graph left
/// after deleting its closed neighborhood. L1/L2 are the vertices at distance 1/2 from the root.
struct LocalStatistics {
    std::uint64_t degree = 0;
    std::uint64_t degree_pairs = 0;            // C(deg, 2)
    std::uint64_t neighborhood_edges = 0;      // |E(G[N(v)])| = triangles through v
    std::uint64_t neighborhood_p3 = 0;         // induced P3 in G[N(v)]
    std::uint64_t neighborhood_triangles = 0;  // triangles in G[N(v)]

    std::uint64_t outer_vertices = 0;  // |V(G - N[v])|
    std::uint64_t outer_edges = 0;
    std::uint64_t outer_pairs = 0;       // C(outer_vertices, 2)
    std::uint64_t outer_triples = 0;     // C(outer_vertices, 3)
    std::uint64_t outer_edge_slots = 0;  // outer_edges * (outer_vertices - 2)
    std::uint64_t outer_two_paths = 0;   // sum over outer x of C(deg_outer(x), 2)
    std::uint64_t outer_triangles = 0;

    // Distance-colored counts in G_v^2.
    std::uint64_t colored_triangles_122 = 0;  // one vertex in L1, two in L2
    std::uint64_t colored_triangles_112 = 0;  // two vertices in L1, one in L2
    std::uint64_t colored_stars_1_22 = 0;     // K_{1,2}: center in L1, leaves in L2
    std::uint64_t colored_stars_2_11 = 0;     // K_{1,2}: center in L2, leaves in L1
    std::uint64_t colored_paths = 0;          // sum over c in L1 of (deg v - 1 - deg_L1(c)) * |N(c) ∩ L2|
};

LocalStatistics local_statistics(const Graph& g, Vertex v);

/// Statistic selectors usable in a plan.
enum class Statistic : std::uint8_t {
    Degree,
    DegreePairs,
    NeighborhoodEdges,
    NeighborhoodP3,
    NeighborhoodTriangles,
    OuterVertices,
    OuterEdges,
    OuterPairs,
    OuterTriples,
    OuterEdgeSlots,
    OuterTwoPaths,
    OuterTriangles,
    ColoredTriangles122,
    ColoredTriangles112,
    ColoredStars1_22,
    ColoredStars2_11,
    ColoredPaths,
};

std::uint64_t value_of(const LocalStatistics& s, Statistic which);

/// One summand of a plan: coefficient times a per-root statistic (summed over roots), a global
/// quantity, or the count of another, earlier target.
struct PlanTerm {
    enum class Kind : std::uint8_t { RootStatistic, EdgePairs, Target };
    Kind kind = Kind::RootStatistic;
    std::int64_t coefficient = 1;
    Statistic statistic = Statistic::Degree;
    SmallPatternId target = SmallPatternId::Edge;
};

/// How one induced count is assembled: alpha is the identity on each statistic, beta the integer
/// linear combination `terms`, gamma exact division by `divisor` (the key-vertex orbit size).
struct FragPlan {
    SmallPatternId target;
    std::string_view key;  // role of the key vertex in the target
    std::vector<PlanTerm> terms;
    std::int64_t divisor = 1;
};

/// The plans in evaluation order (every Target term refers to an earlier plan).
const std::vector<FragPlan>& fragmentation_plans();

/// Exact induced counts of all 17 small patterns.
struct InducedCensus {
    std::array<std::uint64_t, kSmallPatternCount> counts{};

    std::uint64_t operator[](SmallPatternId id) const { return counts[static_cast<std::size_t>(id)]; }
    /// Sum of counts over the patterns with `size` vertices.
    std::uint64_t size_total(std::size_t size) const;
    /// Sums over sizes 2, 3, 4 equal C(n,2), C(n,3), C(n,4).
    bool partition_identities_hold(std::size_t n) const;
};

std::vector<LocalStatistics> all_local_statistics(const Graph& g, Exec exec = Exec::Parallel);

InducedCensus ind_count_le4(const Graph& g, Exec exec = Exec::Parallel);

/// Induced count of paw, diamond, or star3 through its dedicated fragment plan.
/// Other targets throw InputError.
std::uint64_t frag_count(const Graph& g, SmallPatternId target, Exec exec = Exec::Parallel);

using TriangleCounter = std::function<std::uint64_t(const Graph&)>;

/// K4 count as sum over v of base_counter(G[N(v)]) / 4.
std::uint64_t clique_lift(const Graph& g, const TriangleCounter& base_counter, Exec exec = Exec::Parallel);

/// K_size count for 3 <= size <= 6 by lifting base_counter through neighborhoods.
std::uint64_t clique_count(const Graph& g, std::size_t size, const TriangleCounter& base_counter,
                           Exec exec = Exec::Parallel);

}  // namespace lwl
