#include "lwl/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "lwl/errors.hpp"
#include "lwl/families.hpp"

namespace lwl {

const char* to_string(CountMode mode) { return mode == CountMode::Subgraph ? "subgraph" : "induced"; }

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
    if (g.n() > kMaxPatternVertices) {
        throw CapacityError("automorphism enumeration limited to " + std::to_string(kMaxPatternVertices) +
                            " vertices, pattern has " + std::to_string(g.n()));
    }
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::vector<Vertex>> out;
    do {
        bool ok = true;
        for (Vertex u = 0; u < g.n() && ok; ++u) {
            if (g.color(u) != g.color(perm[u]) || g.degree(u) != g.degree(perm[u])) ok = false;
            for (Vertex v = u + 1; v < g.n() && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(perm[u], perm[v]);
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::size_t orbit_size(const Graph& g, Vertex key) {
    if (key >= g.n()) throw InputError("key vertex out of range");
    std::set<Vertex> images;
    for (const auto& perm : automorphisms(g)) images.insert(perm[key]);
    return images.size();
}

bool Pattern::key_is_center() const {
    if (!radius) return false;
    return *radius == eccentricity_center(graph).radius;
}

Pattern make_pattern(Graph graph, std::string name, Vertex key) {
    if (graph.n() == 0) throw InputError("pattern must have at least one vertex");
    if (key >= graph.n()) throw InputError("key vertex out of range for pattern " + name);
    Pattern p;
    p.name = std::move(name);
    p.key = key;
    const auto autos = automorphisms(graph);
    std::set<Vertex> images;
    p.key_stabilizer = 0;
    for (const auto& perm : autos) {
        images.insert(perm[key]);
        if (perm[key] == key) ++p.key_stabilizer;
    }
    p.automorphisms = autos.size();
    p.orbit_size = images.size();
    const auto dist = bfs_distances(graph, key);
    const auto ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc != kUnreachable) p.radius = ecc;
    p.graph = std::move(graph);
    return p;
}

namespace {

Graph with_isolated(const Graph& g, std::size_t extra) { return disjoint_union(g, families::empty(extra)); }

std::vector<Pattern> build_library() {
    using namespace families;
    std::vector<Pattern> lib;
    lib.push_back(make_pattern(empty(2), "nonedge", 0));
    lib.push_back(make_pattern(complete(2), "edge", 0));
    lib.push_back(make_pattern(empty(3), "empty3", 0));
    lib.push_back(make_pattern(with_isolated(complete(2), 1), "edge-iso", 2));
    lib.push_back(make_pattern(path(3), "p3", 1));
    lib.push_back(make_pattern(complete(3), "triangle", 0));
    lib.push_back(make_pattern(empty(4), "empty4", 0));
    lib.push_back(make_pattern(with_isolated(complete(2), 2), "edge-2iso", 2));
    lib.push_back(make_pattern(matching2(), "2k2", 0));
    lib.push_back(make_pattern(with_isolated(path(3), 1), "p3-iso", 3));
    lib.push_back(make_pattern(with_isolated(complete(3), 1), "triangle-iso", 3));
    lib.push_back(make_pattern(path(4), "p4", 1));
    lib.push_back(make_pattern(star(3), "star3", 0));
    lib.push_back(make_pattern(paw(), "paw", 3));
    lib.push_back(make_pattern(cycle(4), "c4", 0));
    lib.push_back(make_pattern(diamond(), "diamond", 0));
    lib.push_back(make_pattern(complete(4), "k4", 0));
    return lib;
}

}  // namespace

const std::vector<Pattern>& pattern_library() {
    static const std::vector<Pattern> lib = build_library();
    return lib;
}

std::vector<std::string> pattern_names() {
    std::vector<std::string> names;
    for (const auto& p : pattern_library()) names.push_back(p.name);
    names.emplace_back("star:s");
    return names;
}

Pattern find_pattern(std::string_view name) {
    for (const auto& p : pattern_library()) {
        if (p.name == name) return p;
    }
    if (name.starts_with("star:")) {
        std::size_t s = 0;
        const auto digits = name.substr(5);
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
        if (ec == std::errc{} && end == digits.data() + digits.size() && s >= 1 && s + 1 <= kMaxPatternVertices) {
            return make_pattern(families::star(s), std::string(name), 0);
        }
    }
    std::string known;
    for (const auto& n : pattern_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown pattern '" + std::string(name) + "'; available: " + known);
}

}  // namespace lwl
