#include "lwl/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "lwl/errors.hpp"

namespace lwl {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v >= g.n()) {
        throw InputError("vertex " + std::to_string(v) + " out of range for graph with " + std::to_string(g.n()) +
                         " vertices");
    }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors) {
    if (!colors.empty() && colors.size() != n) {
        throw InputError("color vector has " + std::to_string(colors.size()) + " entries, expected " +
                         std::to_string(n));
    }
    Graph g;
    g.words_ = (n + 63) / 64;
    g.bits_.assign(n * g.words_, 0);
    g.neighbors_.resize(n);
    g.colors_ = colors.empty() ? std::vector<Color>(n, 0) : std::move(colors);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                             std::to_string(n) + " vertices");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v)) continue;
        g.bits_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.bits_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        g.neighbors_[u].push_back(v);
        g.neighbors_[v].push_back(u);
        ++g.num_edges_;
    }
    for (auto& list : g.neighbors_) std::sort(list.begin(), list.end());
    return g;
}

std::size_t Graph::codegree(Vertex u, Vertex v) const noexcept {
    const auto a = row(u);
    const auto b = row(v);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_; ++w) count += std::popcount(a[w] & b[w]);
    return count;
}

bool Graph::colored() const noexcept {
    return std::any_of(colors_.begin(), colors_.end(), [](Color c) { return c != 0; });
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<Edge> sub;
    std::vector<Color> sub_colors(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(*this, vertices[i]);
        sub_colors[i] = colors_[vertices[i]];
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (adjacent(vertices[i], vertices[j])) sub.emplace_back(Vertex(i), Vertex(j));
        }
    }
    return from_edges(vertices.size(), sub, std::move(sub_colors));
}

Graph Graph::with_colors(std::vector<Color> colors) const {
    if (colors.size() != n()) throw InputError("color vector size does not match vertex count");
    Graph g = *this;
    g.colors_ = std::move(colors);
    return g;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v = u + 1; v < n(); ++v) {
            if (!adjacent(u, v)) comp.emplace_back(u, v);
        }
    }
    return from_edges(n(), comp, colors_);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n()) throw InputError("permutation size does not match vertex count");
    std::vector<Edge> moved;
    moved.reserve(num_edges_);
    for (auto [u, v] : edges()) moved.emplace_back(perm[u], perm[v]);
    std::vector<Color> moved_colors(n());
    std::vector<bool> seen(n(), false);
    for (Vertex v = 0; v < n(); ++v) {
        if (perm[v] >= n() || seen[perm[v]]) throw InputError("relabeling is not a permutation");
        seen[perm[v]] = true;
        moved_colors[perm[v]] = colors_[v];
    }
    return from_edges(n(), moved, std::move(moved_colors));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.n());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    std::vector<Color> colors(a.colors().begin(), a.colors().end());
    colors.insert(colors.end(), b.colors().begin(), b.colors().end());
    return Graph::from_edges(a.n() + b.n(), edges, std::move(colors));
}

std::vector<Vertex> RootedBall::layer(std::uint32_t d) const {
    std::vector<Vertex> out;
    for (Vertex i = 0; i < distance.size(); ++i) {
        if (distance[i] == d) out.push_back(i);
    }
    return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex v) {
    check_vertex(g, v);
    std::vector<std::uint32_t> dist(g.n(), kUnreachable);
    std::deque<Vertex> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<Vertex>> bfs_layers(const Graph& g, Vertex v) {
    const auto dist = bfs_distances(g, v);
    std::vector<std::vector<Vertex>> layers;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (dist[u] == kUnreachable) continue;
        if (dist[u] >= layers.size()) layers.resize(dist[u] + 1);
        layers[dist[u]].push_back(u);
    }
    return layers;
}

RootedBall extract_ball(const Graph& g, Vertex v, std::size_t r) {
    const auto dist = bfs_distances(g, v);
    std::vector<Vertex> members;
    for (Vertex u = 0; u < g.n(); ++u) {
        if (dist[u] != kUnreachable && dist[u] <= r) members.push_back(u);
    }
    std::stable_sort(members.begin(), members.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });

    RootedBall ball;
    ball.root = v;
    ball.radius = r;
    ball.back_map = members;
    ball.distance.reserve(members.size());
    for (Vertex u : members) ball.distance.push_back(dist[u]);
    ball.subgraph = g.induced(members).with_colors({ball.distance.begin(), ball.distance.end()});
    return ball;
}

CenterInfo eccentricity_center(const Graph& g) {
    if (g.n() == 0) throw DomainError("eccentricity of the empty graph is undefined");
    CenterInfo info;
    info.radius = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto dist = bfs_distances(g, v);
        const auto ecc = *std::max_element(dist.begin(), dist.end());
        if (ecc == kUnreachable) throw DomainError("graph is disconnected; eccentricity is infinite");
        if (ecc < info.radius) {
            info.radius = ecc;
            info.centers.clear();
        }
        if (ecc == info.radius) info.centers.push_back(v);
    }
    return info;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::optional<std::size_t> diameter(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    std::size_t best = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        const auto dist = bfs_distances(g, v);
        best = std::max<std::size_t>(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

}  // namespace lwl
