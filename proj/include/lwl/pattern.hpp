#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl {

enum class CountMode { Subgraph, Induced };

const char* to_string(CountMode mode);

inline constexpr std::size_t kMaxPatternVertices = 8;

/// A small pattern H with a designated key vertex u.
///
/// `radius` is the eccentricity of the key vertex, i.e. the ball radius that local counting needs
/// (nullopt when H is disconnected). For the library's centered patterns this equals rad(H); the
/// paw is keyed at its pendant vertex and so needs radius 2.
struct Pattern {
    std::string name;
    Graph graph;
    Vertex key = 0;
    std::optional<std::size_t> radius;
    /// |Orbit_H(key)|.
    std::size_t orbit_size = 1;
    /// |Aut(H)| and the number of automorphisms fixing the key.
    std::size_t automorphisms = 1;
    std::size_t key_stabilizer = 1;

    std::size_t size() const noexcept { return graph.n(); }
    bool connected() const noexcept { return radius.has_value(); }
    /// True when the key attains the pattern's radius.
    bool key_is_center() const;
};

/// All automorphisms of g (color-preserving) by exhaustive permutation. CapacityError above 8 vertices.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);

/// Number of images of `key` under Aut(g).
std::size_t orbit_size(const Graph& g, Vertex key);

/// Computes radius, automorphism counts and orbit size of the key.
Pattern make_pattern(Graph graph, std::string name, Vertex key);

/// Fixed library: nonedge, edge, empty3, edge-iso, p3, triangle, empty4, edge-2iso, 2k2, p3-iso,
/// triangle-iso, p4, star3, paw, c4, diamond, k4.
const std::vector<Pattern>& pattern_library();

/// Library lookup; also accepts "star:s" for K_{1,s} keyed at its center (1 <= s <= 7).
/// Unknown names throw InputError listing the library.
Pattern find_pattern(std::string_view name);

std::vector<std::string> pattern_names();

}  // namespace lwl
