#include "lwl/fragmentation.hpp"

#include <bit>
#include <string>

#include "lwl/counting.hpp"
#include "lwl/errors.hpp"

namespace lwl {

namespace {

struct PatternInfo {
    std::string_view name;
    std::size_t vertices;
    std::string_view row;
    SmallPatternId complement;
};

constexpr std::array<PatternInfo, kSmallPatternCount> kInfo{{
    {"nonedge", 2, "G1", SmallPatternId::Edge},
    {"edge", 2, "G2", SmallPatternId::Nonedge},
    {"empty3", 3, "G3", SmallPatternId::Triangle},
    {"edge-iso", 3, "G4", SmallPatternId::P3},
    {"p3", 3, "G6", SmallPatternId::EdgeIso},
    {"triangle", 3, "G5", SmallPatternId::Empty3},
    {"empty4", 4, "G7", SmallPatternId::K4},
    {"edge-2iso", 4, "G9", SmallPatternId::Diamond},
    {"2k2", 4, "G13", SmallPatternId::C4},
    {"p3-iso", 4, "G11", SmallPatternId::Paw},
    {"triangle-iso", 4, "G16", SmallPatternId::Star3},
    {"p4", 4, "G17", SmallPatternId::P4},
    {"star3", 4, "G15", SmallPatternId::TriangleIso},
    {"paw", 4, "G12", SmallPatternId::P3Iso},
    {"c4", 4, "G14", SmallPatternId::Matching2},
    {"diamond", 4, "G10", SmallPatternId::Edge2Iso},
    {"k4", 4, "G8", SmallPatternId::Empty4},
}};

const PatternInfo& info(SmallPatternId id) { return kInfo[static_cast<std::size_t>(id)]; }

using Words = std::vector<std::uint64_t>;

std::size_t popcount_and(std::span<const std::uint64_t> a, const Words& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < b.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

std::size_t popcount_and3(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b, const Words& c) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) total += std::popcount(a[i] & b[i] & c[i]);
    return total;
}

template <typename Fn>
void for_each_bit(const Words& mask, Fn&& fn) {
    for (std::size_t i = 0; i < mask.size(); ++i) {
        for (std::uint64_t word = mask[i]; word; word &= word - 1) {
            fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word))));
        }
    }
}

// Edges, two-paths (sum of C(inner degree, 2)) and triangles of G[mask].
struct InducedShape {
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t two_paths = 0;
    std::uint64_t triangles = 0;
};

InducedShape induced_shape(const Graph& g, const Words& mask) {
    InducedShape s;
    std::uint64_t degree_sum = 0;
    std::uint64_t triangle_triples = 0;
    for_each_bit(mask, [&](Vertex x) {
        ++s.vertices;
        const std::uint64_t d = popcount_and(g.row(x), mask);
        degree_sum += d;
        s.two_paths += binomial(d, 2);
        for (Vertex y : g.neighbors(x)) {
            if (y > x && ((mask[y >> 6] >> (y & 63)) & 1u)) triangle_triples += popcount_and3(g.row(x), g.row(y), mask);
        }
    });
    s.edges = degree_sum / 2;
    s.triangles = triangle_triples / 3;
    return s;
}

}  // namespace

std::string_view name_of(SmallPatternId id) { return info(id).name; }
std::size_t vertex_count(SmallPatternId id) { return info(id).vertices; }
std::string_view table_row(SmallPatternId id) { return info(id).row; }
SmallPatternId complement_of(SmallPatternId id) { return info(id).complement; }

std::optional<SmallPatternId> small_pattern_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kSmallPatternCount; ++i) {
        if (kInfo[i].name == name) return static_cast<SmallPatternId>(i);
    }
    return std::nullopt;
}

std::array<SmallPatternId, kSmallPatternCount> all_small_patterns() {
    std::array<SmallPatternId, kSmallPatternCount> ids{};
    for (std::size_t i = 0; i < kSmallPatternCount; ++i) ids[i] = static_cast<SmallPatternId>(i);
    return ids;
}

LocalStatistics local_statistics(const Graph& g, Vertex v) {
    if (v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
    const std::size_t words = g.words();
    const auto row_v = g.row(v);

    Words layer1(row_v.begin(), row_v.end());
    Words layer2(words, 0);
    for (Vertex u : g.neighbors(v)) {
        const auto row_u = g.row(u);
        for (std::size_t i = 0; i < words; ++i) layer2[i] |= row_u[i];
    }
    Words outer(words, 0);
    for (std::size_t i = 0; i < words; ++i) {
        layer2[i] &= ~layer1[i];
        outer[i] = ~layer1[i];
    }
    layer2[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    outer[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    if (g.n() % 64 != 0 && words > 0) outer.back() &= (std::uint64_t{1} << (g.n() % 64)) - 1;

    LocalStatistics s;
    s.degree = g.degree(v);
    s.degree_pairs = binomial(s.degree, 2);

    const auto inner = induced_shape(g, layer1);
    s.neighborhood_edges = inner.edges;
    s.neighborhood_triangles = inner.triangles;
    s.neighborhood_p3 = inner.two_paths - 3 * inner.triangles;

    const auto rest = induced_shape(g, outer);
    s.outer_vertices = rest.vertices;
    s.outer_edges = rest.edges;
    s.outer_pairs = binomial(rest.vertices, 2);
    s.outer_triples = binomial(rest.vertices, 3);
    s.outer_edge_slots = rest.vertices >= 2 ? rest.edges * (rest.vertices - 2) : 0;
    s.outer_two_paths = rest.two_paths;
    s.outer_triangles = rest.triangles;

    std::uint64_t triangles_122_twice = 0;
    for (Vertex c : g.neighbors(v)) {
        const std::uint64_t up = popcount_and(g.row(c), layer2);
        const std::uint64_t side = popcount_and(g.row(c), layer1);
        s.colored_stars_1_22 += binomial(up, 2);
        s.colored_paths += (s.degree - 1 - side) * up;
        for_each_bit(layer2, [&](Vertex x) {
            if (g.adjacent(c, x)) triangles_122_twice += popcount_and3(g.row(c), g.row(x), layer2);
        });
    }
    s.colored_triangles_122 = triangles_122_twice / 2;

    std::uint64_t triangles_112_twice = 0;
    for_each_bit(layer2, [&](Vertex x) {
        s.colored_stars_2_11 += binomial(popcount_and(g.row(x), layer1), 2);
        for (Vertex c : g.neighbors(x)) {
            if ((layer1[c >> 6] >> (c & 63)) & 1u) triangles_112_twice += popcount_and3(g.row(c), g.row(x), layer1);
        }
    });
    s.colored_triangles_112 = triangles_112_twice / 2;
    return s;
}

std::uint64_t value_of(const LocalStatistics& s, Statistic which) {
    switch (which) {
        case Statistic::Degree: return s.degree;
        case Statistic::DegreePairs: return s.degree_pairs;
        case Statistic::NeighborhoodEdges: return s.neighborhood_edges;
        case Statistic::NeighborhoodP3: return s.neighborhood_p3;
        case Statistic::NeighborhoodTriangles: return s.neighborhood_triangles;
        case Statistic::OuterVertices: return s.outer_vertices;
        case Statistic::OuterEdges: return s.outer_edges;
        case Statistic::OuterPairs: return s.outer_pairs;
        case Statistic::OuterTriples: return s.outer_triples;
        case Statistic::OuterEdgeSlots: return s.outer_edge_slots;
        case Statistic::OuterTwoPaths: return s.outer_two_paths;
        case Statistic::OuterTriangles: return s.outer_triangles;
        case Statistic::ColoredTriangles122: return s.colored_triangles_122;
        case Statistic::ColoredTriangles112: return s.colored_triangles_112;
        case Statistic::ColoredStars1_22: return s.colored_stars_1_22;
        case Statistic::ColoredStars2_11: return s.colored_stars_2_11;
        case Statistic::ColoredPaths: return s.colored_paths;
    }
    return 0;
}

namespace {

PlanTerm stat(Statistic s, std::int64_t coefficient = 1) {
    return {PlanTerm::Kind::RootStatistic, coefficient, s, SmallPatternId::Edge};
}
PlanTerm target(SmallPatternId t, std::int64_t coefficient) {
    return {PlanTerm::Kind::Target, coefficient, Statistic::Degree, t};
}
PlanTerm edge_pairs() { return {PlanTerm::Kind::EdgePairs, 1, Statistic::Degree, SmallPatternId::Edge}; }

std::vector<FragPlan> build_plans() {
    using S = Statistic;
    using P = SmallPatternId;
    return {
        {P::Nonedge, "any vertex", {stat(S::OuterVertices)}, 2},
        {P::Edge, "any vertex", {stat(S::Degree)}, 2},
        {P::Empty3, "any vertex", {stat(S::OuterPairs), stat(S::OuterEdges, -1)}, 3},
        {P::EdgeIso, "isolated vertex", {stat(S::OuterEdges)}, 1},
        {P::P3, "center", {stat(S::DegreePairs), stat(S::NeighborhoodEdges, -1)}, 1},
        {P::Triangle, "any vertex", {stat(S::NeighborhoodEdges)}, 3},
        {P::Empty4,
         "any vertex",
         {stat(S::OuterTriples), stat(S::OuterEdgeSlots, -1), stat(S::OuterTwoPaths), stat(S::OuterTriangles, -1)},
         4},
        {P::Edge2Iso,
         "isolated vertex",
         {stat(S::OuterEdgeSlots), stat(S::OuterTwoPaths, -2), stat(S::OuterTriangles, 3)},
         2},
        {P::P3Iso, "isolated vertex", {stat(S::OuterTwoPaths), stat(S::OuterTriangles, -3)}, 1},
        {P::TriangleIso, "isolated vertex", {stat(S::OuterTriangles)}, 1},
        {P::K4, "any vertex", {stat(S::NeighborhoodTriangles)}, 4},
        {P::Diamond, "degree-3 vertex", {stat(S::NeighborhoodP3)}, 2},
        {P::Paw, "pendant vertex", {stat(S::ColoredTriangles122)}, 1},
        {P::Star3, "pendant vertex", {stat(S::ColoredStars1_22), stat(S::ColoredTriangles122, -1)}, 3},
        {P::C4, "any vertex", {stat(S::ColoredStars2_11), stat(S::ColoredTriangles112, -1)}, 4},
        {P::P4,
         "inner vertex",
         {stat(S::ColoredPaths), stat(S::ColoredStars2_11, -2), stat(S::ColoredTriangles112, 2)},
         2},
        {P::Matching2,
         "global",
         {edge_pairs(), stat(S::DegreePairs, -1), target(P::P4, -1), target(P::C4, -2), target(P::Paw, -1),
          target(P::Diamond, -2), target(P::K4, -3)},
         1},
    };
}

struct StatTotals {
    std::array<std::uint64_t, 17> sums{};
};

StatTotals sum_statistics(const std::vector<LocalStatistics>& stats) {
    StatTotals t;
    for (const auto& s : stats) {
        for (std::size_t i = 0; i < t.sums.size(); ++i) t.sums[i] += value_of(s, static_cast<Statistic>(i));
    }
    return t;
}

std::uint64_t evaluate(const FragPlan& plan, const StatTotals& totals, const Graph& g, const InducedCensus& done) {
    std::int64_t sum = 0;
    for (const auto& term : plan.terms) {
        std::int64_t value = 0;
        switch (term.kind) {
            case PlanTerm::Kind::RootStatistic:
                value = static_cast<std::int64_t>(totals.sums[static_cast<std::size_t>(term.statistic)]);
                break;
            case PlanTerm::Kind::EdgePairs:
                value = static_cast<std::int64_t>(binomial(g.num_edges(), 2));
                break;
            case PlanTerm::Kind::Target:
                value = static_cast<std::int64_t>(done[term.target]);
                break;
        }
        sum += term.coefficient * value;
    }
    if (sum < 0 || sum % plan.divisor != 0) {
        throw InvariantViolation("fragment plan for " + std::string(name_of(plan.target)) + " produced " +
                                 std::to_string(sum) + ", not a non-negative multiple of " +
                                 std::to_string(plan.divisor));
    }
    return static_cast<std::uint64_t>(sum / plan.divisor);
}

const FragPlan& plan_of(SmallPatternId id) {
    for (const auto& plan : fragmentation_plans()) {
        if (plan.target == id) return plan;
    }
    throw InvariantViolation("no fragment plan for " + std::string(name_of(id)));
}

}  // namespace

const std::vector<FragPlan>& fragmentation_plans() {
    static const std::vector<FragPlan> plans = build_plans();
    return plans;
}

std::uint64_t InducedCensus::size_total(std::size_t size) const {
    std::uint64_t total = 0;
    for (auto id : all_small_patterns()) {
        if (vertex_count(id) == size) total += (*this)[id];
    }
    return total;
}

bool InducedCensus::partition_identities_hold(std::size_t n) const {
    return size_total(2) == binomial(n, 2) && size_total(3) == binomial(n, 3) && size_total(4) == binomial(n, 4);
}

std::vector<LocalStatistics> all_local_statistics(const Graph& g, Exec exec) {
    std::vector<LocalStatistics> stats(g.n());
    for_each_index(g.n(), exec, [&](std::size_t v) { stats[v] = local_statistics(g, static_cast<Vertex>(v)); });
    return stats;
}

InducedCensus ind_count_le4(const Graph& g, Exec exec) {
    const auto totals = sum_statistics(all_local_statistics(g, exec));
    InducedCensus census;
    for (const auto& plan : fragmentation_plans()) {
        census.counts[static_cast<std::size_t>(plan.target)] = evaluate(plan, totals, g, census);
    }
    return census;
}

std::uint64_t frag_count(const Graph& g, SmallPatternId target, Exec exec) {
    if (target != SmallPatternId::Paw && target != SmallPatternId::Diamond && target != SmallPatternId::Star3) {
        throw InputError("frag_count supports paw, diamond and star3, not " + std::string(name_of(target)));
    }
    const auto totals = sum_statistics(all_local_statistics(g, exec));
    return evaluate(plan_of(target), totals, g, InducedCensus{});
}

std::uint64_t clique_lift(const Graph& g, const TriangleCounter& base_counter, Exec exec) {
    return clique_count(g, 4, base_counter, exec);
}

std::uint64_t clique_count(const Graph& g, std::size_t size, const TriangleCounter& base_counter, Exec exec) {
    if (size < 3 || size > 6) throw InputError("clique lift supports sizes 3 to 6");
    if (size == 3) return base_counter(g);
    std::vector<std::uint64_t> per_root(g.n(), 0);
    for_each_index(g.n(), exec, [&](std::size_t v) {
        const auto nbrs = g.neighbors(static_cast<Vertex>(v));
        const Graph neighborhood = g.induced(nbrs);
        per_root[v] = clique_count(neighborhood, size - 1, base_counter, Exec::Serial);
    });
    std::uint64_t sum = 0;
    for (auto c : per_root) sum += c;
    if (sum % size != 0) throw InvariantViolation("clique lift sum not divisible by clique size");
    return sum / size;
}

}  // namespace lwl
