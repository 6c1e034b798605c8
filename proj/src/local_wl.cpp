#include "lwl/local_wl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "lwl/detail/rank.hpp"
#include "lwl/errors.hpp"

namespace lwl {

namespace {

void check_params(std::size_t k, std::size_t r) {
    if (k < 1) throw InputError("k must be at least 1");
    if (r < 1) throw InputError("radius r must be at least 1");
}

std::vector<RootedBall> all_balls(std::span<const Graph> graphs, std::size_t r, Exec exec,
                                  std::vector<std::size_t>& first) {
    first.assign(1, 0);
    for (const auto& g : graphs) first.push_back(first.back() + g.n());
    std::vector<RootedBall> balls(first.back());
    for_each_index(balls.size(), exec, [&](std::size_t global) {
        const auto gi =
            static_cast<std::size_t>(std::upper_bound(first.begin(), first.end(), global) - first.begin()) - 1;
        balls[global] = extract_ball(graphs[gi], static_cast<Vertex>(global - first[gi]), r);
    });
    return balls;
}

template <typename T>
std::vector<T> sorted_copy(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<LocalSignature> local_kwl_batch(std::span<const Graph> graphs, std::size_t k, std::size_t r,
                                            const RefineOptions& options) {
    check_params(k, r);
    std::vector<std::size_t> first;
    const auto balls = all_balls(graphs, r, options.exec, first);
    std::vector<Graph> subgraphs;
    subgraphs.reserve(balls.size());
    for (const auto& ball : balls) subgraphs.push_back(ball.subgraph);

    const auto colorings = refine_batch(subgraphs, k, options);
    std::vector<ColorHistogram> histograms(colorings.size());
    for_each_index(colorings.size(), options.exec, [&](std::size_t i) { histograms[i] = histogram(colorings[i]); });
    const auto ids = detail::dense_rank(histograms);

    std::vector<LocalSignature> out(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        out[gi].k = k;
        out[gi].r = r;
        out[gi].attribute.assign(ids.begin() + static_cast<std::ptrdiff_t>(first[gi]),
                                 ids.begin() + static_cast<std::ptrdiff_t>(first[gi + 1]));
        out[gi].histograms.assign(histograms.begin() + static_cast<std::ptrdiff_t>(first[gi]),
                                  histograms.begin() + static_cast<std::ptrdiff_t>(first[gi + 1]));
    }
    return out;
}

LocalSignature local_kwl(const Graph& g, std::size_t k, std::size_t r, const RefineOptions& options) {
    return std::move(local_kwl_batch(std::span(&g, 1), k, r, options).front());
}

std::vector<LayerResult> layer_kwl_batch(std::span<const RootedBall> balls, std::size_t k,
                                         const RefineOptions& options) {
    if (k < 1) throw InputError("k must be at least 1");
    std::vector<LayerResult> out(balls.size());
    std::size_t max_pairs = 0;
    for (const auto& ball : balls) {
        if (ball.layer_count() == 0) throw InputError("layer_kwl needs a non-empty ball");
        max_pairs = std::max(max_pairs, std::max<std::size_t>(1, ball.layer_count() - 1));
    }

    // Previous run per ball: its coloring and the ball-vertex -> run-vertex map.
    std::vector<Coloring> previous(balls.size());
    std::vector<std::vector<std::uint32_t>> previous_index(balls.size());

    for (std::size_t pair = 0; pair < max_pairs; ++pair) {
        std::vector<std::size_t> active;
        for (std::size_t b = 0; b < balls.size(); ++b) {
            if (std::max<std::size_t>(1, balls[b].layer_count() - 1) > pair) active.push_back(b);
        }

        std::vector<Graph> subgraphs(active.size());
        std::vector<std::vector<Vertex>> members(active.size());
        std::vector<std::vector<std::uint64_t>> seeds(active.size());
        for_each_index(active.size(), options.exec, [&](std::size_t a) {
            const RootedBall& ball = balls[active[a]];
            for (Vertex u = 0; u < ball.distance.size(); ++u) {
                if (ball.distance[u] == pair || ball.distance[u] == pair + 1) members[a].push_back(u);
            }
            subgraphs[a] = ball.subgraph.induced(members[a]);
            if (pair == 0) return;

            // col(u_1..u_l) := col(u_1..u_l, u_1, ..., u_1) on the processed entries.
            const std::size_t m = members[a].size();
            const std::size_t tuples = tuple_count(m, k);
            const Coloring& prev = previous[active[a]];
            const auto& prev_index = previous_index[active[a]];
            seeds[a].assign(tuples, 0);
            std::vector<Vertex> tuple(k);
            std::vector<Vertex> processed;
            for (std::size_t t = 0; t < tuples; ++t) {
                std::size_t rest = t;
                for (std::size_t i = k; i-- > 0;) {
                    tuple[i] = static_cast<Vertex>(rest % m);
                    rest /= m;
                }
                processed.clear();
                for (Vertex x : tuple) {
                    const Vertex ball_vertex = members[a][x];
                    if (ball.distance[ball_vertex] == pair) processed.push_back(prev_index[ball_vertex]);
                }
                if (processed.empty()) continue;
                processed.resize(k, processed.front());
                seeds[a][t] = std::uint64_t{prev.at(processed)} + 1;
            }
        });

        auto colorings = pair == 0 ? refine_batch(subgraphs, k, options) : refine_batch(subgraphs, k, options, seeds);
        for (std::size_t a = 0; a < active.size(); ++a) {
            const std::size_t b = active[a];
            out[b].pair_histograms.push_back(histogram(colorings[a]));
            previous[b] = std::move(colorings[a]);
            previous_index[b].assign(balls[b].distance.size(), 0);
            for (std::uint32_t i = 0; i < members[a].size(); ++i) previous_index[b][members[a][i]] = i;
        }
    }
    return out;
}

LayerResult layer_kwl(const RootedBall& ball, std::size_t k, const RefineOptions& options) {
    return std::move(layer_kwl_batch(std::span(&ball, 1), k, options).front());
}

namespace {

using Signature = std::vector<std::uint32_t>;

// Pooled vertex colors of a batch, flattened: colors[first[gi] + v].
struct BatchColors {
    std::vector<std::size_t> first;
    std::vector<std::uint32_t> colors;

    std::size_t count_distinct() const {
        auto s = sorted_copy(colors);
        return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    }
};

struct GroupRun {
    std::size_t graph;
    std::vector<Vertex> members;
    std::pair<std::uint32_t, std::uint32_t> tag;  // the class ids the group was built from
};

// 2-WL on the induced subgraph of every vertex group, all groups of all graphs pooled in one run.
// Returns, per group, the diagonal color of each member.
std::vector<std::vector<std::uint32_t>> run_groups(std::span<const Graph> graphs, const BatchColors& state,
                                                   const std::vector<GroupRun>& groups, const RefineOptions& options) {
    std::vector<Graph> subgraphs(groups.size());
    for_each_index(groups.size(), options.exec, [&](std::size_t i) {
        const auto& group = groups[i];
        const Graph& g = graphs[group.graph];
        std::vector<Color> colors(group.members.size());
        for (std::size_t j = 0; j < group.members.size(); ++j) {
            colors[j] = state.colors[state.first[group.graph] + group.members[j]];
        }
        subgraphs[i] = g.induced(group.members).with_colors(std::move(colors));
    });
    const auto colorings = refine_batch(subgraphs, 2, options);
    std::vector<std::vector<std::uint32_t>> diagonals(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (Vertex j = 0; j < groups[i].members.size(); ++j) diagonals[i].push_back(colorings[i].diagonal(j));
    }
    return diagonals;
}

std::vector<std::vector<Vertex>> classes_of(const BatchColors& state, std::size_t gi, std::size_t n,
                                            std::vector<std::uint32_t>& class_ids) {
    std::map<std::uint32_t, std::vector<Vertex>> by_color;
    for (Vertex v = 0; v < n; ++v) by_color[state.colors[state.first[gi] + v]].push_back(v);
    std::vector<std::vector<Vertex>> classes;
    class_ids.clear();
    for (auto& [color, members] : by_color) {
        class_ids.push_back(color);
        classes.push_back(std::move(members));
    }
    return classes;
}

void one_wl(std::span<const Graph> graphs, BatchColors& state, const RefineOptions& options) {
    std::vector<Graph> colored(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        colored[gi] = graphs[gi].with_colors({state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi]),
                                              state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi + 1])});
    }
    const auto colorings = refine_batch(colored, 1, options);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        std::copy(colorings[gi].colors.begin(), colorings[gi].colors.end(),
                  state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi]));
    }
}

// Rerank every vertex by (old color, sorted list of (group tag, diagonal color)) over its groups.
void absorb(BatchColors& state, const std::vector<GroupRun>& groups,
            const std::vector<std::vector<std::uint32_t>>& diagonals) {
    std::vector<Signature> signatures(state.colors.size());
    for (std::size_t i = 0; i < state.colors.size(); ++i) signatures[i].push_back(state.colors[i]);
    std::vector<std::vector<std::array<std::uint32_t, 3>>> seen(state.colors.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = 0; j < groups[i].members.size(); ++j) {
            const auto [low, high] = groups[i].tag;
            seen[state.first[groups[i].graph] + groups[i].members[j]].push_back({low, high, diagonals[i][j]});
        }
    }
    for (std::size_t i = 0; i < signatures.size(); ++i) {
        std::sort(seen[i].begin(), seen[i].end());
        for (const auto& entry : seen[i]) signatures[i].insert(signatures[i].end(), entry.begin(), entry.end());
    }
    state.colors = detail::dense_rank(signatures);
}

}  // namespace

std::vector<Coloring> recursive_12_batch(std::span<const Graph> graphs, const RefineOptions& options) {
    BatchColors state;
    state.first.push_back(0);
    for (const auto& g : graphs) state.first.push_back(state.first.back() + g.n());
    state.colors.resize(state.first.back());
    {
        const auto colorings = refine_batch(graphs, 1, options);
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            std::copy(colorings[gi].colors.begin(), colorings[gi].colors.end(),
                      state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi]));
        }
    }

    std::size_t iterations = 0;
    std::size_t classes = state.count_distinct();
    while (true) {
        ++iterations;
        // 2-WL inside each color class.
        std::vector<GroupRun> groups;
        std::vector<std::uint32_t> ids;
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            auto cls = classes_of(state, gi, graphs[gi].n(), ids);
            for (std::size_t c = 0; c < cls.size(); ++c) groups.push_back({gi, std::move(cls[c]), {ids[c], ids[c]}});
        }
        absorb(state, groups, run_groups(graphs, state, groups, options));

        // 1-WL on the whole graph with the refined colors.
        one_wl(graphs, state, options);

        // 2-WL on every pair of classes, a class with itself included.
        groups.clear();
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
            const auto cls = classes_of(state, gi, graphs[gi].n(), ids);
            for (std::size_t a = 0; a < cls.size(); ++a) {
                for (std::size_t b = a; b < cls.size(); ++b) {
                    std::vector<Vertex> members = cls[a];
                    if (b != a) members.insert(members.end(), cls[b].begin(), cls[b].end());
                    std::sort(members.begin(), members.end());
                    groups.push_back({gi, std::move(members), {ids[a], ids[b]}});
                }
            }
        }
        absorb(state, groups, run_groups(graphs, state, groups, options));

        const std::size_t next = state.count_distinct();
        if (next == classes) break;
        classes = next;
    }

    std::vector<Coloring> out(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        out[gi].arity = 1;
        out[gi].n = graphs[gi].n();
        out[gi].colors.assign(state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi]),
                              state.colors.begin() + static_cast<std::ptrdiff_t>(state.first[gi + 1]));
        out[gi].rounds = iterations;
        out[gi].stable = true;
    }
    return out;
}

Coloring recursive_12_wl(const Graph& g, const RefineOptions& options) {
    return std::move(recursive_12_batch(std::span(&g, 1), options).front());
}

const char* to_string(LocalVariant v) {
    switch (v) {
        case LocalVariant::Local:
            return "local";
        case LocalVariant::Layer:
            return "layer";
        case LocalVariant::Recursive12:
            return "recursive12";
    }
    return "?";
}

std::vector<std::vector<std::uint32_t>> layer_attributes_batch(std::span<const Graph> graphs, std::size_t k,
                                                               std::size_t r, const RefineOptions& options) {
    check_params(k, r);
    std::vector<std::size_t> first;
    const auto balls = all_balls(graphs, r, options.exec, first);
    const auto results = layer_kwl_batch(balls, k, options);
    std::vector<std::vector<ColorHistogram>> keys;
    keys.reserve(results.size());
    for (const auto& res : results) keys.push_back(res.pair_histograms);
    const auto ids = detail::dense_rank(keys);
    std::vector<std::vector<std::uint32_t>> out(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        out[gi].assign(ids.begin() + static_cast<std::ptrdiff_t>(first[gi]),
                       ids.begin() + static_cast<std::ptrdiff_t>(first[gi + 1]));
    }
    return out;
}

Verdict compare_local(const Graph& g1, const Graph& g2, LocalVariant variant, std::size_t k, std::size_t r,
                      const RefineOptions& options) {
    if (g1.n() != g2.n()) return Verdict::Distinguished;
    const Graph pair[] = {g1, g2};
    bool same = false;
    switch (variant) {
        case LocalVariant::Local: {
            const auto sigs = local_kwl_batch(pair, k, r, options);
            same = sorted_copy(sigs[0].attribute) == sorted_copy(sigs[1].attribute);
            break;
        }
        case LocalVariant::Layer: {
            const auto attrs = layer_attributes_batch(pair, k, r, options);
            same = sorted_copy(attrs[0]) == sorted_copy(attrs[1]);
            break;
        }
        case LocalVariant::Recursive12: {
            const auto colorings = recursive_12_batch(pair, options);
            same = histogram(colorings[0]) == histogram(colorings[1]);
            break;
        }
    }
    return same ? Verdict::Equivalent : Verdict::Distinguished;
}

Verdict compare_balls_local(const RootedBall& a, const RootedBall& b, std::size_t k, const RefineOptions& options) {
    if (a.subgraph.n() != b.subgraph.n()) return Verdict::Distinguished;
    const Graph pair[] = {a.subgraph, b.subgraph};
    const auto colorings = refine_batch(pair, k, options);
    return histogram(colorings[0]) == histogram(colorings[1]) ? Verdict::Equivalent : Verdict::Distinguished;
}

Verdict compare_balls_layer(const RootedBall& a, const RootedBall& b, std::size_t k, const RefineOptions& options) {
    if (a.subgraph.n() != b.subgraph.n()) return Verdict::Distinguished;
    const RootedBall pair[] = {a, b};
    const auto results = layer_kwl_batch(pair, k, options);
    return results[0].pair_histograms == results[1].pair_histograms ? Verdict::Equivalent : Verdict::Distinguished;
}

}  // namespace lwl
