#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/parallel.hpp"
#include "lwl/pattern.hpp"

namespace lwl {

/// Exact count of a pattern with its per-root tallies. total * orbit_size == sum(per_root).
struct CountReport {
    std::string pattern;
    CountMode mode = CountMode::Subgraph;
    std::uint64_t total = 0;
    std::size_t orbit_size = 1;
    std::vector<std::uint64_t> per_root;
};

/// Copies of p in the ball in which the root plays the key vertex. Subgraph copies are
/// (vertex set, edge set) pairs; induced copies are vertex sets. Enumerates injections with
/// key -> root and divides by the key stabilizer of Aut(p).
///
/// Throws InputError if the ball radius is smaller than the key's eccentricity or p is disconnected.
std::uint64_t local_rooted_count(const Pattern& p, const RootedBall& ball, CountMode mode);

/// Sum of local rooted counts over all vertices divided by the key orbit size. Connected patterns
/// are counted on r-hop balls; disconnected patterns on the whole graph seen from each root.
CountReport count_pattern(const Graph& g, const Pattern& p, CountMode mode, Exec exec = Exec::Parallel);

/// Triangles as sum over v of |E(G[N(v)])|, divided by 3.
std::uint64_t count_triangles_fast(const Graph& g, Exec exec = Exec::Parallel);

/// count_pattern restricted to radius-one patterns, skipping roots with deg(v) + 1 < |V(p)|.
CountReport count_radius_one(const Graph& g, const Pattern& p, CountMode mode, Exec exec = Exec::Parallel);

struct StarMatchingCounts {
    std::uint64_t star = 0;       // subgraph copies of K_{1,s}
    std::uint64_t matching2 = 0;  // subgraph copies of 2K2
};

/// sum_v C(deg v, s) and C(m, 2) - sum_v C(deg v, 2).
StarMatchingCounts closed_form_star_and_matching(const Graph& g, std::size_t s);

/// 4-cycles as subgraphs: (1/2) sum over pairs {u, w} of C(codeg(u, w), 2).
std::uint64_t count_c4_subgraph(const Graph& g, Exec exec = Exec::Parallel);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lwl
