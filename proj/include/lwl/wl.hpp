#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/parallel.hpp"

namespace lwl {

/// Colors of all k-tuples of one graph. Tuple (v_1, ..., v_k) lives at index
/// v_1 * n^(k-1) + ... + v_k. Color ids are canonical within the refinement run that produced
/// them: two tuples (of any graph in the same run) share an id iff they share a refinement history.
struct Coloring {
    std::size_t arity = 1;
    std::size_t n = 0;
    std::vector<Color> colors;
    std::size_t rounds = 0;
    bool stable = false;

    Color at(std::span<const Vertex> tuple) const;
    /// Vertex color read off the diagonal tuple (v, ..., v).
    Color diagonal(Vertex v) const;
    std::size_t num_classes() const;
};

using ColorHistogram = std::map<Color, std::uint64_t>;

ColorHistogram histogram(const Coloring& coloring);

struct RefineOptions {
    /// Stop after this many rounds even if not stable. nullopt runs to stability.
    std::optional<std::size_t> max_rounds;
    /// Budget on the total number of tuples (sum of n^k over the batch).
    std::size_t max_tuples = std::size_t{1} << 20;
    Exec exec = Exec::Parallel;
};

/// Refines every graph of the batch in lockstep with one shared palette: each round, the exact
/// signatures of all tuples of all graphs are pooled, sorted, and ranked, so ids are comparable
/// across the batch. Tuples never mix vertices of different graphs.
///
/// k = 1 is classic color refinement: signature (color, {{neighbor colors}}), seeded by vertex colors.
/// k >= 2 is folklore k-WL: initial color = atomic type (equalities, adjacencies, vertex colors of
/// the entries); signature (color, {{(c(t[1<-w]), ..., c(t[k<-w])) : w in V}}).
///
/// `seeds`, if non-empty, holds one extra initial label per tuple for every graph; it is folded
/// into the initial color. Refinement continues until the pooled partition stops splitting.
std::vector<Coloring> refine_batch(std::span<const Graph> graphs, std::size_t k, const RefineOptions& options = {},
                                   std::span<const std::vector<std::uint64_t>> seeds = {});

Coloring refine_1wl(const Graph& g, const RefineOptions& options = {});
Coloring refine_kwl(const Graph& g, std::size_t k, const RefineOptions& options = {});

enum class Verdict { Equivalent, Distinguished };

const char* to_string(Verdict v);

/// k-WL equivalence test. Graphs of different order are Distinguished without refinement.
Verdict compare(const Graph& g1, const Graph& g2, std::size_t k, const RefineOptions& options = {});

/// n^k with overflow saturating at SIZE_MAX.
std::size_t tuple_count(std::size_t n, std::size_t k);

}  // namespace lwl
