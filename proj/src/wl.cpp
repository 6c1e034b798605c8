#include "lwl/wl.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lwl/errors.hpp"

namespace lwl {

std::size_t tuple_count(std::size_t n, std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && total > SIZE_MAX / n) return SIZE_MAX;
        total *= n;
    }
    return total;
}

Color Coloring::at(std::span<const Vertex> tuple) const {
    if (tuple.size() != arity) throw InputError("tuple arity mismatch");
    std::size_t index = 0;
    for (Vertex v : tuple) index = index * n + v;
    return colors.at(index);
}

Color Coloring::diagonal(Vertex v) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < arity; ++i) index = index * n + v;
    return colors.at(index);
}

std::size_t Coloring::num_classes() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ColorHistogram histogram(const Coloring& coloring) {
    ColorHistogram h;
    for (Color c : coloring.colors) ++h[c];
    return h;
}

const char* to_string(Verdict v) { return v == Verdict::Equivalent ? "Equivalent" : "Distinguished"; }

namespace {

// One signature per tuple of the whole batch, stored back to back.
struct SignatureTable {
    std::vector<std::uint32_t> data;
    std::vector<std::size_t> offset;  // size = tuples + 1

    std::span<const std::uint32_t> at(std::size_t i) const {
        return {data.data() + offset[i], offset[i + 1] - offset[i]};
    }
};

// Dense canonical ranks: equal signatures share a rank, ranks follow lexicographic order.
std::vector<Color> rank_signatures(const SignatureTable& table, std::size_t& classes) {
    const std::size_t count = table.offset.size() - 1;
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    auto less = [&](std::uint32_t a, std::uint32_t b) {
        const auto sa = table.at(a);
        const auto sb = table.at(b);
        return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<Color> rank(count);
    Color next = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0 && less(order[i - 1], order[i])) ++next;
        rank[order[i]] = next;
    }
    classes = count == 0 ? 0 : next + 1;
    return rank;
}

struct BatchLayout {
    std::vector<std::size_t> first;  // first global tuple index of each graph; size = graphs + 1
    std::size_t k = 1;

    std::size_t graph_of(std::size_t global) const {
        return static_cast<std::size_t>(std::upper_bound(first.begin(), first.end(), global) - first.begin()) - 1;
    }
};

void decode_tuple(std::size_t index, std::size_t n, std::size_t k, std::vector<Vertex>& tuple) {
    tuple.resize(k);
    for (std::size_t i = k; i-- > 0;) {
        tuple[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
}

SignatureTable initial_signatures(std::span<const Graph> graphs, const BatchLayout& layout,
                                  std::span<const std::vector<std::uint64_t>> seeds, Exec exec) {
    const std::size_t k = layout.k;
    const std::size_t pairs = k * (k - 1) / 2;
    const std::size_t width = pairs + k + (seeds.empty() ? 0 : 2);
    const std::size_t total = layout.first.back();
    SignatureTable table;
    table.data.resize(total * width);
    table.offset.resize(total + 1);
    for (std::size_t i = 0; i <= total; ++i) table.offset[i] = i * width;

    for_each_index(graphs.size(), exec, [&](std::size_t gi) {
        const Graph& g = graphs[gi];
        const std::size_t n = g.n();
        std::vector<Vertex> tuple;
        for (std::size_t local = 0; local < layout.first[gi + 1] - layout.first[gi]; ++local) {
            decode_tuple(local, n, k, tuple);
            std::uint32_t* out = table.data.data() + (layout.first[gi] + local) * width;
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = i + 1; j < k; ++j) {
                    *out++ = tuple[i] == tuple[j] ? 2u : (g.adjacent(tuple[i], tuple[j]) ? 1u : 0u);
                }
            }
            for (std::size_t i = 0; i < k; ++i) *out++ = g.color(tuple[i]);
            if (!seeds.empty()) {
                const std::uint64_t s = seeds[gi][local];
                *out++ = static_cast<std::uint32_t>(s >> 32);
                *out++ = static_cast<std::uint32_t>(s);
            }
        }
    });
    return table;
}

SignatureTable refinement_signatures_1wl(std::span<const Graph> graphs, const BatchLayout& layout,
                                         const std::vector<Color>& current, Exec exec) {
    const std::size_t total = layout.first.back();
    SignatureTable table;
    table.offset.resize(total + 1);
    table.offset[0] = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (Vertex v = 0; v < graphs[gi].n(); ++v) {
            const std::size_t global = layout.first[gi] + v;
            table.offset[global + 1] = table.offset[global] + 1 + graphs[gi].degree(v);
        }
    }
    table.data.resize(table.offset.back());
    for_each_index(total, exec, [&](std::size_t global) {
        const std::size_t gi = layout.graph_of(global);
        const Vertex v = static_cast<Vertex>(global - layout.first[gi]);
        std::uint32_t* out = table.data.data() + table.offset[global];
        out[0] = current[global];
        std::size_t i = 1;
        for (Vertex w : graphs[gi].neighbors(v)) out[i++] = current[layout.first[gi] + w];
        std::sort(out + 1, out + i);
    });
    return table;
}

SignatureTable refinement_signatures_kwl(std::span<const Graph> graphs, const BatchLayout& layout,
                                         const std::vector<Color>& current, Exec exec) {
    const std::size_t k = layout.k;
    const std::size_t total = layout.first.back();
    SignatureTable table;
    table.offset.resize(total + 1);
    table.offset[0] = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const std::size_t width = 1 + graphs[gi].n() * k;
        for (std::size_t t = layout.first[gi]; t < layout.first[gi + 1]; ++t) {
            table.offset[t + 1] = table.offset[t] + width;
        }
    }
    table.data.resize(table.offset.back());

    for_each_index(total, exec, [&](std::size_t global) {
        const std::size_t gi = layout.graph_of(global);
        const std::size_t n = graphs[gi].n();
        const std::size_t local = global - layout.first[gi];
        const Color* colors = current.data() + layout.first[gi];

        std::vector<Vertex> tuple;
        decode_tuple(local, n, k, tuple);
        std::vector<std::size_t> stride(k);
        for (std::size_t j = k; j-- > 0;) stride[j] = (j + 1 == k) ? 1 : stride[j + 1] * n;

        // blocks[w] = (c(t[1<-w]), ..., c(t[k<-w]))
        std::vector<std::uint32_t> blocks(n * k);
        for (std::size_t w = 0; w < n; ++w) {
            for (std::size_t j = 0; j < k; ++j) {
                const std::size_t neighbor = local - tuple[j] * stride[j] + w * stride[j];
                blocks[w * k + j] = colors[neighbor];
            }
        }
        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::lexicographical_compare(blocks.begin() + a * k, blocks.begin() + (a + 1) * k,
                                                blocks.begin() + b * k, blocks.begin() + (b + 1) * k);
        });
        std::uint32_t* out = table.data.data() + table.offset[global];
        *out++ = colors[local];
        for (std::uint32_t w : order) out = std::copy_n(blocks.begin() + w * k, k, out);
    });
    return table;
}

}  // namespace

std::vector<Coloring> refine_batch(std::span<const Graph> graphs, std::size_t k, const RefineOptions& options,
                                   std::span<const std::vector<std::uint64_t>> seeds) {
    if (k == 0) throw InputError("WL dimension k must be at least 1");
    if (!seeds.empty() && seeds.size() != graphs.size()) throw InputError("one seed vector per graph is required");

    BatchLayout layout;
    layout.k = k;
    layout.first.push_back(0);
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const std::size_t tuples = tuple_count(graphs[gi].n(), k);
        if (tuples > options.max_tuples || layout.first.back() > options.max_tuples - tuples) {
            throw CapacityError("k-WL tuple budget exceeded: n^k = " + std::to_string(graphs[gi].n()) + "^" +
                                std::to_string(k) + " pushes the batch past " + std::to_string(options.max_tuples) +
                                " tuples");
        }
        if (!seeds.empty() && seeds[gi].size() != tuples) throw InputError("seed vector size must equal n^k");
        layout.first.push_back(layout.first.back() + tuples);
    }

    std::size_t classes = 0;
    std::vector<Color> current = rank_signatures(initial_signatures(graphs, layout, seeds, options.exec), classes);

    std::size_t rounds = 0;
    bool stable = false;
    while (!stable && (!options.max_rounds || rounds < *options.max_rounds)) {
        const auto table = k == 1 ? refinement_signatures_1wl(graphs, layout, current, options.exec)
                                  : refinement_signatures_kwl(graphs, layout, current, options.exec);
        std::size_t next_classes = 0;
        current = rank_signatures(table, next_classes);
        ++rounds;
        stable = next_classes == classes;
        classes = next_classes;
    }

    std::vector<Coloring> out(graphs.size());
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        out[gi].arity = k;
        out[gi].n = graphs[gi].n();
        out[gi].colors.assign(current.begin() + static_cast<std::ptrdiff_t>(layout.first[gi]),
                              current.begin() + static_cast<std::ptrdiff_t>(layout.first[gi + 1]));
        out[gi].rounds = rounds;
        out[gi].stable = stable;
    }
    return out;
}

Coloring refine_1wl(const Graph& g, const RefineOptions& options) {
    return std::move(refine_batch(std::span(&g, 1), 1, options).front());
}

Coloring refine_kwl(const Graph& g, std::size_t k, const RefineOptions& options) {
    if (k < 2) throw InputError("refine_kwl requires k >= 2; use refine_1wl for k = 1");
    return std::move(refine_batch(std::span(&g, 1), k, options).front());
}

Verdict compare(const Graph& g1, const Graph& g2, std::size_t k, const RefineOptions& options) {
    if (g1.n() != g2.n()) return Verdict::Distinguished;
    const Graph pair[] = {g1, g2};
    const auto colorings = refine_batch(pair, k, options);
    return histogram(colorings[0]) == histogram(colorings[1]) ? Verdict::Equivalent : Verdict::Distinguished;
}

}  // namespace lwl
