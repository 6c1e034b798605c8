#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "lwl/io.hpp"

namespace lwl::testing {

std::filesystem::path corpus_dir() { return LWL_CORPUS_DIR; }

nlohmann::json load_golden() {
    std::ifstream in(corpus_dir() / "golden.json");
    return nlohmann::json::parse(in);
}

std::vector<CorpusGraph> load_corpus() {
    std::vector<CorpusGraph> out;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir())) {
        const auto ext = entry.path().extension();
        if (ext != ".txt" && ext != ".g6") continue;
        out.push_back({entry.path().filename().string(), io::read_graph_file(entry.path())});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
    return out;
}

Graph corpus_graph(const std::string& file) { return io::read_graph_file(corpus_dir() / file); }

std::vector<RandomCase> random_corpus(std::size_t count, std::uint64_t base_seed) {
    constexpr std::size_t sizes[] = {8, 10, 12};
    constexpr double densities[] = {0.2, 0.5, 0.8};
    std::vector<RandomCase> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = sizes[i % 3];
        const double p = densities[(i / 3) % 3];
        const std::uint64_t seed = base_seed + i;
        out.push_back({n, p, seed, io::gen_random(n, p, seed)});
    }
    return out;
}

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs;
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
    while (true) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            auto [u, v] = std::minmax(stubs[i], stubs[i + 1]);
            simple = u != v && edges.emplace(u, v).second;
        }
        if (simple) return Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.end()));
    }
}

}  // namespace lwl::testing
