// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lwl/counting.hpp"
#include "lwl/families.hpp"
#include "lwl/fragmentation.hpp"
#include "lwl/io.hpp"
#include "lwl/local_wl.hpp"
#include "lwl/oracle.hpp"
#include "lwl/wl.hpp"
#include "support.hpp"

using namespace lwl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) first_failure = what;
        pass = false;
    }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
    std::printf("%s [%d] %s: %s", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    if (!o.pass) std::printf(" (first failure: %s)", o.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string tag(const testing::RandomCase& c) {
    std::ostringstream s;
    s << "n=" << c.n << " p=" << c.p << " seed=" << c.seed;
    return s.str();
}

struct GraphPair {
    std::string name;
    Graph a;
    Graph b;
};

// Golden corpus pairs of equal order plus pairs of random regular graphs of equal degree.
std::vector<GraphPair> comparison_corpus() {
    std::vector<GraphPair> pairs;
    const auto corpus = testing::load_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (corpus[i].graph.n() != corpus[j].graph.n()) continue;
            pairs.push_back({corpus[i].file + " vs " + corpus[j].file, corpus[i].graph, corpus[j].graph});
        }
    }
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{8, 3}, {10, 3}, {12, 3}, {12, 4}};
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const auto [n, d] = shapes[s];
        for (std::uint64_t t = 0; t < 8; ++t) {
            const std::uint64_t seed = 7000 + 100 * s + 2 * t;
            pairs.push_back({"regular " + std::to_string(n) + "," + std::to_string(d) + " seed " + std::to_string(seed),
                             testing::random_regular(n, d, seed), testing::random_regular(n, d, seed + 1)});
        }
    }
    return pairs;
}

void criterion_oracle_equivalence(const std::vector<testing::RandomCase>& cases) {
    const auto start = Clock::now();
    Outcome o;
    std::size_t checks = 0;
    const std::vector<std::string> names{"triangle", "p3",     "star3",  "paw",    "diamond", "c4",
                                         "k4",       "2k2",    "star:1", "star:2", "star:3",  "star:4"};
    auto expect = [&](std::uint64_t got, std::uint64_t want, const std::string& what) {
        ++checks;
        o.check(got == want, what + " got " + std::to_string(got) + " want " + std::to_string(want));
    };
    for (const auto& c : cases) {
        const Graph& g = c.graph;
        for (const auto& name : names) {
            const Pattern p = find_pattern(name);
            for (auto mode : {CountMode::Subgraph, CountMode::Induced}) {
                const auto want = oracle::count(g, p.graph, mode);
                expect(count_pattern(g, p, mode).total, want,
                       "count_pattern " + name + " " + to_string(mode) + " " + tag(c));
            }
        }
        const auto triangles = oracle::count(g, families::complete(3), CountMode::Subgraph);
        expect(count_triangles_fast(g), triangles, "count_triangles_fast " + tag(c));
        expect(count_c4_subgraph(g), oracle::count(g, families::cycle(4), CountMode::Subgraph),
               "count_c4_subgraph " + tag(c));
        const auto matching = oracle::count(g, families::matching2(), CountMode::Subgraph);
        for (std::size_t s = 1; s <= 4; ++s) {
            const auto closed = closed_form_star_and_matching(g, s);
            expect(closed.star, oracle::count(g, families::star(s), CountMode::Subgraph),
                   "closed_form star " + std::to_string(s) + " " + tag(c));
            expect(closed.matching2, matching, "closed_form 2k2 " + tag(c));
        }
        for (auto id : {SmallPatternId::Paw, SmallPatternId::Diamond, SmallPatternId::Star3}) {
            expect(frag_count(g, id), oracle::count(g, find_pattern(name_of(id)).graph, CountMode::Induced),
                   "frag_count " + std::string(name_of(id)) + " " + tag(c));
        }
        expect(clique_lift(g, [](const Graph& h) { return count_triangles_fast(h); }),
               oracle::count(g, families::complete(4), CountMode::Subgraph), "clique_lift " + tag(c));
    }
    const double elapsed = seconds_since(start);
    o.check(elapsed < 60.0, "runtime over 60 s");
    o.detail = std::to_string(cases.size()) + " graphs, " + std::to_string(checks) + " exact checks, " +
               std::to_string(elapsed) + " s";
    report(1, "counting equals the oracle", o);
}

void criterion_census(const std::vector<testing::RandomCase>& cases) {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& c : cases) {
        const auto census = ind_count_le4(c.graph);
        o.check(census.partition_identities_hold(c.graph.n()), "partition identities " + tag(c));
        for (auto id : all_small_patterns()) {
            ++checks;
            const auto want = oracle::count(c.graph, find_pattern(name_of(id)).graph, CountMode::Induced);
            o.check(census[id] == want, std::string(name_of(id)) + " " + tag(c));
        }
    }
    o.detail = std::to_string(cases.size()) + " graphs, " + std::to_string(checks) + " induced counts, " +
               "partition identities on every graph";
    report(2, "induced census of all 17 patterns", o);
}

void criterion_separation() {
    const auto start = Clock::now();
    Outcome o;
    const Graph c6 = families::cycle(6);
    const Graph two_c3 = families::repeat(families::cycle(3), 2);
    const auto wl1 = compare(c6, two_c3, 1);
    const auto local = compare_local(c6, two_c3, LocalVariant::Local, 1, 1);
    const auto wl2 = compare(c6, two_c3, 2);
    o.check(wl1 == Verdict::Equivalent, "1-WL");
    o.check(local == Verdict::Distinguished, "local 1-WL r=1");
    o.check(wl2 == Verdict::Distinguished, "2-WL");
    const double elapsed = seconds_since(start);
    o.check(elapsed < 1.0, "runtime over 1 s");
    o.detail = std::string("1-WL ") + to_string(wl1) + ", local 1-WL r=1 " + to_string(local) + ", 2-WL " +
               to_string(wl2) + ", " + std::to_string(elapsed) + " s";
    report(3, "C6 vs 2C3 separations", o);
}

void criterion_layer_local() {
    std::vector<std::pair<RootedBall, RootedBall>> pairs;
    // Random: balls of one G(n, p) graph around different roots, and around the same root of two graphs.
    for (const auto& c : testing::random_corpus(30, 9000)) {
        const Graph other = io::gen_random(c.n, c.p, c.seed + 50000);
        for (std::size_t r : {1, 2}) {
            pairs.emplace_back(extract_ball(c.graph, 0, r), extract_ball(c.graph, 1, r));
            pairs.emplace_back(extract_ball(c.graph, 0, r), extract_ball(other, 0, r));
        }
    }
    // Adversarial 2-regular: long cycles against unions of shorter cycles, so the balls agree layer by layer
    // until the radius reaches the shorter girth.
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cycle_sets{
        {{6}, {3, 3}}, {{8}, {4, 4}}, {{8}, {5, 3}}, {{9}, {3, 3, 3}}, {{10}, {5, 5}}, {{12}, {6, 6}}, {{12}, {4, 4, 4}}};
    auto cycles = [](const std::vector<std::size_t>& lengths) {
        Graph g = families::empty(0);
        for (auto len : lengths) g = disjoint_union(g, families::cycle(len));
        return g;
    };
    for (const auto& [left, right] : cycle_sets) {
        const Graph a = cycles(left);
        const Graph b = cycles(right);
        for (std::size_t r = 1; r <= 4; ++r) pairs.emplace_back(extract_ball(a, 0, r), extract_ball(b, 0, r));
    }
    Outcome o;
    std::size_t equivalent = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t k : {1, 2}) {
            const auto layer = compare_balls_layer(pairs[i].first, pairs[i].second, k);
            const auto local = compare_balls_local(pairs[i].first, pairs[i].second, k);
            if (local == Verdict::Equivalent) ++equivalent;
            o.check(layer == local, "pair " + std::to_string(i) + " k=" + std::to_string(k));
        }
    }
    o.check(pairs.size() >= 50, "fewer than 50 pairs");
    o.detail = std::to_string(pairs.size()) + " ball pairs x k in {1,2}, " + std::to_string(equivalent) +
               " equivalent verdicts";
    report(4, "layer verdicts equal local verdicts", o);
}

void criterion_sandwich(const std::vector<GraphPair>& pairs) {
    Outcome o;
    std::size_t distinguished = 0;
    for (const auto& pair : pairs) {
        const bool wl1 = compare(pair.a, pair.b, 1) == Verdict::Distinguished;
        const bool rec = compare_local(pair.a, pair.b, LocalVariant::Recursive12, 1, 1) == Verdict::Distinguished;
        const bool wl2 = compare(pair.a, pair.b, 2) == Verdict::Distinguished;
        distinguished += rec;
        o.check(!wl1 || rec, "1-WL but not recursive12: " + pair.name);
        o.check(!rec || wl2, "recursive12 but not 2-WL: " + pair.name);
    }
    const auto witness = compare_local(families::cycle(6), families::repeat(families::cycle(3), 2),
                                       LocalVariant::Recursive12, 1, 1);
    o.check(witness == Verdict::Distinguished, "recursive12 on C6 vs 2C3");
    o.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(distinguished) +
               " recursive12-distinguished, C6 vs 2C3 " + to_string(witness);
    report(5, "1-WL <= recursive12 <= 2-WL", o);
}

void criterion_invariance(const std::vector<GraphPair>& pairs) {
    const std::vector<std::pair<std::string, Graph>> trees{{"k1", families::path(1)},
                                                          {"k2", families::path(2)},
                                                          {"p3", families::path(3)},
                                                          {"p4", families::path(4)},
                                                          {"star3", families::star(3)}};
    const std::vector<std::pair<std::string, Graph>> subgraphs{{"star1", families::star(1)},
                                                              {"star2", families::star(2)},
                                                              {"star3", families::star(3)},
                                                              {"2k2", families::matching2()}};
    Outcome o;
    std::size_t equivalent = 0;
    for (const auto& pair : pairs) {
        if (compare(pair.a, pair.b, 1) != Verdict::Equivalent) continue;
        ++equivalent;
        for (const auto& [name, t] : trees) {
            o.check(oracle::hom_count(t, pair.a) == oracle::hom_count(t, pair.b), "hom " + name + ": " + pair.name);
        }
        for (const auto& [name, h] : subgraphs) {
            o.check(oracle::count(pair.a, h, CountMode::Subgraph) == oracle::count(pair.b, h, CountMode::Subgraph),
                    "subgraph " + name + ": " + pair.name);
        }
    }
    o.check(equivalent > 0, "no 1-WL-equivalent pairs");
    o.detail = std::to_string(equivalent) + " 1-WL-equivalent pairs, 5 trees and 4 subgraph patterns each";
    report(6, "1-WL-equivalent pairs share tree and star counts", o);
}

void criterion_hierarchy(const std::vector<GraphPair>& pairs) {
    Outcome o;
    std::size_t wl2_distinguished = 0;
    for (const auto& pair : pairs) {
        const bool wl1 = compare(pair.a, pair.b, 1) == Verdict::Distinguished;
        const bool wl2 = compare(pair.a, pair.b, 2) == Verdict::Distinguished;
        o.check(!wl1 || wl2, "1-WL but not 2-WL: " + pair.name);
        if (wl2) {
            ++wl2_distinguished;
            o.check(!oracle::iso(pair.a, pair.b).isomorphic, "2-WL distinguished isomorphic graphs: " + pair.name);
        }
    }
    o.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(wl2_distinguished) +
               " 2-WL-distinguished, all non-isomorphic";
    report(7, "hierarchy monotone and sound", o);
}

std::string run_cli(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "lwl");
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, out, err);
    return out.str() + "\x1f" + err.str();
}

void criterion_determinism() {
    Outcome o;
    const auto dir = testing::corpus_dir();
    auto path = [&](const std::string& f) { return (dir / f).string(); };
    const std::vector<std::vector<std::string>> commands{
        {"refine", "--k", "1", path("petersen.g6")},
        {"refine", "--k", "2", path("shrikhande.txt")},
        {"refine", "--variant", "local", "--k", "2", "--r", "2", path("rand4_12.txt")},
        {"refine", "--variant", "layer", "--k", "2", "--r", "2", path("cube.txt")},
        {"refine", "--variant", "recursive12", path("rook4x4.g6")},
        {"compare", "--k", "1", path("c6.txt"), path("2c3.txt")},
        {"compare", "--k", "3", path("rook4x4.g6"), path("shrikhande.txt")},
        {"compare", "--variant", "local", "--k", "1", "--r", "1", path("c6.txt"), path("2c3.txt")},
        {"count", "--pattern", "paw", "--mode", "induced", path("rand5_12.txt")},
        {"count", "--pattern", "c4", "--method", "oracle", path("rand3_10.txt")},
        {"count", "--pattern", "k4", "--method", "fast", path("k5.txt")},
        {"frag", "--all4", path("rand2_10.g6")},
        {"gen", "--n", "12", "--p", "0.4", "--seed", "99"},
        {"gen", "--n", "9", "--p", "0.5", "--seed", "3", "--format", "graph6"},
        {"verify", "--corpus", dir.string()},
    };
    for (const auto& cmd : commands) {
        int first_code = 0;
        int second_code = 0;
        const auto first = run_cli(cmd, first_code);
        const auto second = run_cli(cmd, second_code);
        o.check(first == second && first_code == second_code, "command " + cmd[0] + " " + cmd.back());
        o.check(first_code != 2, "command failed: " + cmd[0] + " " + cmd.back());
    }
    std::size_t round_trips = 0;
    for (const auto& [file, g] : testing::load_corpus()) {
        for (auto format : {io::GraphFormat::EdgeList, io::GraphFormat::Graph6}) {
            ++round_trips;
            const auto text = io::serialize(g, format);
            const Graph back = io::parse_graph(text, format);
            o.check(back == g && io::serialize(back, format) == text, "round trip " + file);
        }
    }
    o.detail = std::to_string(commands.size()) + " commands run twice, " + std::to_string(round_trips) +
               " corpus round trips";
    report(8, "determinism and round trips", o);
}

void guarded(const std::function<void()>& body, int id) {
    try {
        body();
    } catch (const std::exception& e) {
        std::printf("FAIL [%d] threw: %s\n", id, e.what());
        ++failures;
    }
}

}  // namespace

int main() {
    const auto cases = testing::random_corpus(200, 1000);
    const auto pairs = comparison_corpus();
    guarded([&] { criterion_oracle_equivalence(cases); }, 1);
    guarded([&] { criterion_census(cases); }, 2);
    guarded(criterion_separation, 3);
    guarded(criterion_layer_local, 4);
    guarded([&] { criterion_sandwich(pairs); }, 5);
    guarded([&] { criterion_invariance(pairs); }, 6);
    guarded([&] { criterion_hierarchy(pairs); }, 7);
    guarded(criterion_determinism, 8);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
