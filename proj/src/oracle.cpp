#include "lwl/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lwl/errors.hpp"

namespace lwl::oracle {

namespace {

std::uint64_t factorial(std::size_t k) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Index of the unordered pair {i, j} (i != j) among k positions.
std::uint32_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
    if (i > j) std::swap(i, j);
    return static_cast<std::uint32_t>(i * k + j);
}

std::uint64_t count_in_subset(const Graph& g, const Graph& p, CountMode mode, const std::vector<Vertex>& subset) {
    const std::size_t k = p.n();
    std::vector<Vertex> perm(k);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::uint64_t> images;
    do {
        bool ok = true;
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < k && ok; ++i) {
            for (std::size_t j = i + 1; j < k && ok; ++j) {
                const bool host = g.adjacent(subset[perm[i]], subset[perm[j]]);
                const bool pattern = p.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
                if (pattern && !host) ok = false;
                if (mode == CountMode::Induced && host && !pattern) ok = false;
                if (pattern) image |= std::uint64_t{1} << pair_index(perm[i], perm[j], k);
            }
        }
        if (!ok) continue;
        if (mode == CountMode::Induced) return 1;
        images.push_back(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(images.begin(), images.end());
    return static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
}

}  // namespace

std::uint64_t count(const Graph& g, const Graph& p, CountMode mode, const Budget& budget) {
    const std::size_t k = p.n();
    if (k > kMaxPatternVertices) {
        throw CapacityError("oracle count limited to " + std::to_string(kMaxPatternVertices) +
                            "-vertex patterns, got " + std::to_string(k));
    }
    if (k > g.n()) return 0;
    const std::uint64_t subsets = choose(g.n(), k);
    const std::uint64_t per_subset = factorial(k);
    if (subsets > budget.max_placements / per_subset) {
        throw CapacityError("oracle count needs C(" + std::to_string(g.n()) + "," + std::to_string(k) + ") x " +
                            std::to_string(k) + "! placements, budget is " + std::to_string(budget.max_placements));
    }
    std::uint64_t total = 0;
    std::vector<Vertex> subset(k);
    std::iota(subset.begin(), subset.end(), 0u);
    const auto n = static_cast<Vertex>(g.n());
    while (true) {
        total += count_in_subset(g, p, mode, subset);
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return total;
}

std::uint64_t count(const Graph& g, const Pattern& p, CountMode mode, const Budget& budget) {
    return count(g, p.graph, mode, budget);
}

std::uint64_t hom_count(const Graph& h, const Graph& g, const Budget& budget) {
    if (h.n() > kMaxHomSource) {
        throw CapacityError("homomorphism count limited to " + std::to_string(kMaxHomSource) +
                            "-vertex sources, got " + std::to_string(h.n()));
    }
    std::vector<Vertex> image(h.n());
    std::uint64_t nodes = 0;
    std::uint64_t total = 0;
    auto extend = [&](auto&& self, std::size_t depth) -> void {
        if (++nodes > budget.max_nodes) {
            throw CapacityError("homomorphism count exceeded node budget " + std::to_string(budget.max_nodes));
        }
        if (depth == h.n()) {
            ++total;
            return;
        }
        for (Vertex c = 0; c < g.n(); ++c) {
            bool ok = true;
            for (Vertex j = 0; j < depth && ok; ++j) {
                if (h.adjacent(static_cast<Vertex>(depth), j) && !g.adjacent(c, image[j])) ok = false;
            }
            if (!ok) continue;
            image[depth] = c;
            self(self, depth + 1);
        }
    };
    extend(extend, 0);
    return total;
}

std::vector<Graph> spasm(const Graph& h) {
    if (h.n() > kMaxHomSource) {
        throw CapacityError("spasm limited to " + std::to_string(kMaxHomSource) + "-vertex graphs");
    }
    const Graph plain = Graph::from_edges(h.n(), h.edges());
    std::vector<Graph> found{plain};
    for (std::size_t next = 0; next < found.size(); ++next) {
        const Graph current = found[next];
        for (Vertex u = 0; u < current.n(); ++u) {
            for (Vertex v = u + 1; v < current.n(); ++v) {
                if (current.adjacent(u, v)) continue;
                // Identify v with u; vertices above v shift down by one.
                auto rename = [&](Vertex x) { return x == v ? u : (x > v ? x - 1 : x); };
                std::vector<Edge> edges;
                for (const auto& [a, b] : current.edges()) edges.emplace_back(rename(a), rename(b));
                Graph merged = Graph::from_edges(current.n() - 1, edges);
                const bool seen = std::any_of(found.begin(), found.end(),
                                              [&](const Graph& f) { return iso(f, merged).isomorphic; });
                if (!seen) found.push_back(std::move(merged));
            }
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const Graph& a, const Graph& b) {
        if (a.n() != b.n()) return a.n() > b.n();
        return a.num_edges() > b.num_edges();
    });
    return found;
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& map) {
    if (a.n() != b.n() || map.size() != a.n()) return false;
    std::vector<bool> hit(b.n(), false);
    for (Vertex v : map) {
        if (v >= b.n() || hit[v]) return false;
        hit[v] = true;
    }
    for (Vertex u = 0; u < a.n(); ++u) {
        if (a.color(u) != b.color(map[u])) return false;
        for (Vertex v = u + 1; v < a.n(); ++v) {
            if (a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
        }
    }
    return true;
}

namespace {

// (color, degree, sorted neighbor degrees): equal for a vertex and its image under any isomorphism.
using VertexInvariant = std::vector<std::uint64_t>;

std::vector<VertexInvariant> invariants(const Graph& g) {
    std::vector<VertexInvariant> out(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        auto& inv = out[v];
        inv.push_back(g.color(v));
        inv.push_back(g.degree(v));
        std::vector<std::uint64_t> nd;
        for (Vertex u : g.neighbors(v)) nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        inv.insert(inv.end(), nd.begin(), nd.end());
    }
    return out;
}

IsoCertificate exhaustive(const Graph& g1, const Graph& g2) {
    if (g1.n() > kMaxExhaustiveIso) {
        throw CapacityError("exhaustive isomorphism limited to " + std::to_string(kMaxExhaustiveIso) + " vertices");
    }
    IsoCertificate cert;
    cert.method = IsoMethod::Exhaustive;
    std::vector<Vertex> perm(g1.n());
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        if (is_isomorphism(g1, g2, perm)) {
            cert.isomorphic = true;
            cert.witness = perm;
            return cert;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cert;
}

IsoCertificate backtracking(const Graph& g1, const Graph& g2, const Budget& budget) {
    IsoCertificate cert;
    cert.method = IsoMethod::Backtracking;
    const auto inv1 = invariants(g1);
    const auto inv2 = invariants(g2);
    {
        auto s1 = inv1;
        auto s2 = inv2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return cert;
    }
    // Place g1 vertices in BFS order so each new vertex usually has a mapped neighbor.
    std::vector<Vertex> order;
    std::vector<bool> queued(g1.n(), false);
    for (Vertex s = 0; s < g1.n(); ++s) {
        if (queued[s]) continue;
        queued[s] = true;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (Vertex y : g1.neighbors(order[head])) {
                if (!queued[y]) {
                    queued[y] = true;
                    order.push_back(y);
                }
            }
        }
    }
    std::vector<Vertex> map(g1.n(), 0);
    std::vector<bool> used(g2.n(), false);
    std::uint64_t nodes = 0;
    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (++nodes > budget.max_nodes) {
            throw CapacityError("isomorphism search exceeded node budget " + std::to_string(budget.max_nodes));
        }
        if (depth == order.size()) return true;
        const Vertex x = order[depth];
        for (Vertex c = 0; c < g2.n(); ++c) {
            if (used[c] || inv1[x] != inv2[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j) {
                ok = g1.adjacent(x, order[j]) == g2.adjacent(c, map[order[j]]);
            }
            if (!ok) continue;
            map[x] = c;
            used[c] = true;
            if (self(self, depth + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    if (extend(extend, 0)) {
        cert.isomorphic = true;
        cert.witness = map;
    }
    return cert;
}

}  // namespace

IsoCertificate iso(const Graph& g1, const Graph& g2, IsoMethod method, const Budget& budget) {
    if (g1.n() != g2.n() || g1.num_edges() != g2.num_edges()) {
        IsoCertificate cert;
        cert.method = method;
        return cert;
    }
    return method == IsoMethod::Exhaustive ? exhaustive(g1, g2) : backtracking(g1, g2, budget);
}

}  // namespace lwl::oracle
