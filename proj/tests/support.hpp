#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lwl/graph.hpp"

namespace lwl::testing {

struct CorpusGraph {
    std::string file;
    Graph graph;
};

std::filesystem::path corpus_dir();
nlohmann::json load_golden();
/// Every graph file of the golden corpus, sorted by file name.
std::vector<CorpusGraph> load_corpus();
Graph corpus_graph(const std::string& file);

struct RandomCase {
    std::size_t n;
    double p;
    std::uint64_t seed;
    Graph graph;
};

/// 200 seeded G(n, p) graphs, n in {8, 10, 12} and p in {0.2, 0.5, 0.8}, cycling through the nine
/// combinations.
std::vector<RandomCase> random_corpus(std::size_t count = 200, std::uint64_t base_seed = 1000);

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

/// Random d-regular graph on n vertices (configuration model with rejection).
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace lwl::testing
