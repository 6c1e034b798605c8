#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lwl/graph.hpp"
#include "lwl/wl.hpp"

namespace lwl {

/// Per-vertex attributes of Local k-WL: the stable histogram of k-WL run on the vertex's
/// distance-colored r-hop ball. `attribute[v]` is a dense id of `histograms[v]`, canonical across
/// every graph refined in the same batch.
struct LocalSignature {
    std::size_t k = 1;
    std::size_t r = 1;
    std::vector<std::uint32_t> attribute;
    std::vector<ColorHistogram> histograms;
};

/// Local k-WL on several graphs with one joint canonicalization over all of their balls.
/// k = 1 uses color refinement seeded by distance colors; k >= 2 uses folklore k-WL.
std::vector<LocalSignature> local_kwl_batch(std::span<const Graph> graphs, std::size_t k, std::size_t r,
                                            const RefineOptions& options = {});

LocalSignature local_kwl(const Graph& g, std::size_t k, std::size_t r, const RefineOptions& options = {});

/// Result of Layer k-WL on one rooted ball.
///
/// The ball's layers are processed as consecutive pairs (0,1), (1,2), ..., each run on the
/// subgraph induced by the two layers. A run's initial tuple colors fold in the previous run's
/// stable color of the sub-tuple of already-processed entries, padded by repeating its first entry
/// to arity k. `pair_histograms[i]` is the stable histogram of the run on layers (i, i+1).
struct LayerResult {
    std::vector<ColorHistogram> pair_histograms;

    const ColorHistogram& final_histogram() const { return pair_histograms.back(); }
};

/// Layer k-WL on a batch of balls with joint canonicalization per layer pair.
std::vector<LayerResult> layer_kwl_batch(std::span<const RootedBall> balls, std::size_t k,
                                         const RefineOptions& options = {});

LayerResult layer_kwl(const RootedBall& ball, std::size_t k, const RefineOptions& options = {});

/// Recursive (1,2)-WL on several graphs with shared color ids. Returns arity-1 colorings.
///
/// Alternates: 2-WL on each color class, 1-WL on the whole graph, 2-WL on the union of every
/// pair of classes (including a class with itself), until the vertex partition stops splitting.
/// Vertex colors are read off 2-WL diagonals.
std::vector<Coloring> recursive_12_batch(std::span<const Graph> graphs, const RefineOptions& options = {});

Coloring recursive_12_wl(const Graph& g, const RefineOptions& options = {});

enum class LocalVariant { Local, Layer, Recursive12 };

const char* to_string(LocalVariant v);

/// Distinguished iff the multisets of per-vertex attributes (local, layer) or the final vertex
/// color histograms (recursive12) differ under joint canonicalization. `r` is ignored for
/// recursive12 and `k` is fixed to (1,2) there.
Verdict compare_local(const Graph& g1, const Graph& g2, LocalVariant variant, std::size_t k, std::size_t r,
                      const RefineOptions& options = {});

/// Per-vertex Layer k-WL attributes over the r-hop balls of each graph, canonical across the batch.
std::vector<std::vector<std::uint32_t>> layer_attributes_batch(std::span<const Graph> graphs, std::size_t k,
                                                               std::size_t r, const RefineOptions& options = {});

/// Ball-level verdicts used to check that Layer k-WL matches Local k-WL on a ball pair.
Verdict compare_balls_local(const RootedBall& a, const RootedBall& b, std::size_t k, const RefineOptions& options = {});
Verdict compare_balls_layer(const RootedBall& a, const RootedBall& b, std::size_t k, const RefineOptions& options = {});

}  // namespace lwl
