#include "lwl/counting.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lwl/errors.hpp"

namespace lwl {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

namespace {

// Pattern vertices in BFS order from the key (other components appended), each with the position
// of an earlier-placed neighbor to draw candidates from.
struct EmbeddingPlan {
    std::vector<Vertex> order;
    std::vector<int> anchor;
    std::vector<std::uint32_t> key_distance;   // indexed by pattern vertex
    std::vector<std::size_t> within;           // within[i] = #pattern vertices at key distance <= i
};

EmbeddingPlan plan_for(const Pattern& p) {
    const Graph& h = p.graph;
    EmbeddingPlan plan;
    plan.key_distance = bfs_distances(h, p.key);
    std::vector<bool> placed(h.n(), false);
    std::vector<int> position(h.n(), -1);
    auto bfs_from = [&](Vertex start) {
        std::deque<Vertex> queue{start};
        placed[start] = true;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            position[x] = static_cast<int>(plan.order.size());
            plan.order.push_back(x);
            for (Vertex y : h.neighbors(x)) {
                if (!placed[y]) {
                    placed[y] = true;
                    queue.push_back(y);
                }
            }
        }
    };
    bfs_from(p.key);
    for (Vertex x = 0; x < h.n(); ++x) {
        if (!placed[x]) bfs_from(x);
    }
    plan.anchor.assign(plan.order.size(), -1);
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
        for (Vertex y : h.neighbors(plan.order[i])) {
            if (position[y] < static_cast<int>(i)) {
                plan.anchor[i] = position[y];
                break;
            }
        }
    }
    if (p.radius) {
        plan.within.assign(*p.radius + 1, 0);
        for (auto d : plan.key_distance) {
            for (std::size_t i = d; i <= *p.radius; ++i) ++plan.within[i];
        }
    }
    return plan;
}

class Embedder {
  public:
    Embedder(const Pattern& p, const EmbeddingPlan& plan, const Graph& host, std::span<const std::uint32_t> dist,
             CountMode mode)
        : p_(p), plan_(plan), host_(host), dist_(dist), mode_(mode), image_(p.size()), used_(host.n(), false) {}

    std::uint64_t injections_from(Vertex root) {
        count_ = 0;
        image_[0] = root;
        used_[root] = true;
        extend(1);
        used_[root] = false;
        return count_;
    }

  private:
    void extend(std::size_t depth) {
        if (depth == plan_.order.size()) {
            ++count_;
            return;
        }
        const int anchor = plan_.anchor[depth];
        if (anchor >= 0) {
            for (Vertex c : host_.neighbors(image_[static_cast<std::size_t>(anchor)])) try_candidate(depth, c);
        } else {
            for (Vertex c = 0; c < host_.n(); ++c) try_candidate(depth, c);
        }
    }

    void try_candidate(std::size_t depth, Vertex c) {
        if (used_[c]) return;
        const Vertex x = plan_.order[depth];
        const auto bound = plan_.key_distance[x];
        if (bound != kUnreachable && (dist_[c] == kUnreachable || dist_[c] > bound)) return;
        const Graph& h = p_.graph;
        for (std::size_t j = 0; j < depth; ++j) {
            const bool pattern_edge = h.adjacent(x, plan_.order[j]);
            const bool host_edge = host_.adjacent(c, image_[j]);
            if (pattern_edge && !host_edge) return;
            if (mode_ == CountMode::Induced && !pattern_edge && host_edge) return;
        }
        image_[depth] = c;
        used_[c] = true;
        extend(depth + 1);
        used_[c] = false;
    }

    const Pattern& p_;
    const EmbeddingPlan& plan_;
    const Graph& host_;
    std::span<const std::uint32_t> dist_;
    CountMode mode_;
    std::vector<Vertex> image_;
    std::vector<bool> used_;
    std::uint64_t count_ = 0;
};

std::uint64_t copies_from_injections(const Pattern& p, std::uint64_t injections) {
    if (injections % p.key_stabilizer != 0) {
        throw InvariantViolation("rooted injection count " + std::to_string(injections) +
                                 " not divisible by key stabilizer " + std::to_string(p.key_stabilizer) +
                                 " for pattern " + p.name);
    }
    return injections / p.key_stabilizer;
}

// Necessary condition: for each i, the ball holds at least as many vertices within distance i as the
// pattern holds within key distance i (pattern vertices at distance d map to ball distance <= d).
bool layers_admit(const EmbeddingPlan& plan, std::span<const std::uint32_t> dist) {
    std::vector<std::size_t> within(plan.within.size(), 0);
    for (auto d : dist) {
        if (d == kUnreachable) continue;
        for (std::size_t i = d; i < within.size(); ++i) ++within[i];
    }
    for (std::size_t i = 0; i < within.size(); ++i) {
        if (within[i] < plan.within[i]) return false;
    }
    return true;
}

std::uint64_t rooted_ball_count(const Pattern& p, const EmbeddingPlan& plan, const RootedBall& ball, CountMode mode) {
    if (!layers_admit(plan, ball.distance)) return 0;
    Embedder embedder(p, plan, ball.subgraph, ball.distance, mode);
    return copies_from_injections(p, embedder.injections_from(0));
}

CountReport finish(const Pattern& p, CountMode mode, std::vector<std::uint64_t> per_root) {
    CountReport report;
    report.pattern = p.name;
    report.mode = mode;
    report.orbit_size = p.orbit_size;
    std::uint64_t sum = 0;
    for (auto c : per_root) sum += c;
    if (sum % p.orbit_size != 0) {
        throw InvariantViolation("sum of rooted counts " + std::to_string(sum) + " not divisible by orbit size " +
                                 std::to_string(p.orbit_size) + " for pattern " + p.name);
    }
    report.total = sum / p.orbit_size;
    report.per_root = std::move(per_root);
    return report;
}

}  // namespace

std::uint64_t local_rooted_count(const Pattern& p, const RootedBall& ball, CountMode mode) {
    if (!p.radius) throw InputError("pattern " + p.name + " is disconnected; it has no finite key radius");
    if (ball.radius < *p.radius) {
        throw InputError("ball radius " + std::to_string(ball.radius) + " is smaller than the key radius " +
                         std::to_string(*p.radius) + " of pattern " + p.name);
    }
    return rooted_ball_count(p, plan_for(p), ball, mode);
}

CountReport count_pattern(const Graph& g, const Pattern& p, CountMode mode, Exec exec) {
    const auto plan = plan_for(p);
    std::vector<std::uint64_t> per_root(g.n(), 0);
    if (p.radius) {
        for_each_index(g.n(), exec, [&](std::size_t v) {
            per_root[v] = rooted_ball_count(p, plan, extract_ball(g, static_cast<Vertex>(v), *p.radius), mode);
        });
    } else {
        for_each_index(g.n(), exec, [&](std::size_t v) {
            const auto dist = bfs_distances(g, static_cast<Vertex>(v));
            Embedder embedder(p, plan, g, dist, mode);
            per_root[v] = copies_from_injections(p, embedder.injections_from(static_cast<Vertex>(v)));
        });
    }
    return finish(p, mode, std::move(per_root));
}

std::uint64_t count_triangles_fast(const Graph& g, Exec exec) {
    std::vector<std::uint64_t> neighborhood_edges(g.n(), 0);
    for_each_index(g.n(), exec, [&](std::size_t v) {
        std::uint64_t twice = 0;
        for (Vertex u : g.neighbors(static_cast<Vertex>(v))) twice += g.codegree(static_cast<Vertex>(v), u);
        neighborhood_edges[v] = twice / 2;
    });
    std::uint64_t sum = 0;
    for (auto e : neighborhood_edges) sum += e;
    if (sum % 3 != 0) throw InvariantViolation("neighborhood edge sum not divisible by 3");
    return sum / 3;
}

CountReport count_radius_one(const Graph& g, const Pattern& p, CountMode mode, Exec exec) {
    if (!p.radius || *p.radius != 1) {
        throw InputError("count_radius_one needs a pattern whose key vertex is dominating; " + p.name + " has key radius " +
                         (p.radius ? std::to_string(*p.radius) : std::string("unbounded")));
    }
    const auto plan = plan_for(p);
    std::vector<std::uint64_t> per_root(g.n(), 0);
    for_each_index(g.n(), exec, [&](std::size_t v) {
        if (g.degree(static_cast<Vertex>(v)) + 1 < p.size()) return;
        per_root[v] = rooted_ball_count(p, plan, extract_ball(g, static_cast<Vertex>(v), 1), mode);
    });
    return finish(p, mode, std::move(per_root));
}

StarMatchingCounts closed_form_star_and_matching(const Graph& g, std::size_t s) {
    if (s < 1) throw InputError("star size s must be at least 1");
    StarMatchingCounts out;
    std::uint64_t two_paths = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        out.star += binomial(g.degree(v), s);
        two_paths += binomial(g.degree(v), 2);
    }
    // K_{1,1} is an edge and gets counted from both endpoints.
    if (s == 1) out.star /= 2;
    out.matching2 = binomial(g.num_edges(), 2) - two_paths;
    return out;
}

std::uint64_t count_c4_subgraph(const Graph& g, Exec exec) {
    std::vector<std::uint64_t> partial(g.n(), 0);
    for_each_index(g.n(), exec, [&](std::size_t u) {
        for (Vertex w = static_cast<Vertex>(u) + 1; w < g.n(); ++w) {
            partial[u] += binomial(g.codegree(static_cast<Vertex>(u), w), 2);
        }
    });
    std::uint64_t sum = 0;
    for (auto c : partial) sum += c;
    if (sum % 2 != 0) throw InvariantViolation("codegree pair sum for 4-cycles is odd");
    return sum / 2;
}

}  // namespace lwl
