#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lwl/families.hpp"
#include "lwl/io.hpp"
#include "lwl/local_wl.hpp"
#include "support.hpp"

using namespace lwl;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "lwl");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string corpus(const std::string& file) { return (testing::corpus_dir() / file).string(); }

class TempDir {
  public:
    explicit TempDir(const std::string& name) : path_(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("count with the fast method") {
    const auto r = run({"count", "--pattern", "triangle", "--mode", "subgraph", "--method", "fast", corpus("k4.txt")});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["total"] == 4);
    const auto local = run({"count", "--pattern", "paw", "--mode", "induced", corpus("paw.txt")});
    CHECK(json::parse(local.out)["per_root"] == json::array({0, 0, 0, 1}));
    const auto none = run({"count", "--pattern", "p4", "--method", "fast", corpus("k4.txt")});
    CHECK(none.code == 2);
    CHECK(none.err.find("no fast method") != std::string::npos);
}

TEST_CASE("compare exit codes") {
    const auto eq = run({"compare", "--k", "1", corpus("c6.txt"), corpus("2c3.txt")});
    CHECK(eq.code == 0);
    CHECK(json::parse(eq.out)["verdict"] == "Equivalent");
    const auto dist = run({"compare", "--k", "2", corpus("c6.txt"), corpus("2c3.txt")});
    CHECK(dist.code == 1);
    CHECK(json::parse(dist.out)["verdict"] == "Distinguished");
    CHECK(run({"compare", "--variant", "local", "--k", "1", "--r", "1", corpus("c6.txt"), corpus("2c3.txt")}).code == 1);
    CHECK(run({"compare", "--variant", "recursive12", corpus("c6.txt"), corpus("2c3.txt")}).code == 1);
    CHECK(run({"compare", "--variant", "sideways", corpus("c6.txt"), corpus("2c3.txt")}).code == 2);
    CHECK(run({"compare", corpus("c6.txt"), corpus("missing.txt")}).code == 2);
}

TEST_CASE("frag on C4") {
    const auto r = run({"frag", "--all4", corpus("c4.txt")});
    REQUIRE(r.code == 0);
    const auto report = json::parse(r.out);
    CHECK(report["counts"]["c4"] == 1);
    CHECK(report["counts"]["nonedge"] == 2);
    CHECK(report["partition_identities"] == true);
}

TEST_CASE("refine variants") {
    for (const char* variant : {"plain", "local", "layer", "recursive12"}) {
        const auto r = run({"refine", "--k", "2", "--variant", variant, "--r", "2", corpus("petersen.g6")});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["classes"] == (std::string(variant) == "plain" ? 3 : 1));
    }
}

TEST_CASE("errors are reported with exit code 2") {
    const auto unknown = run({"count", "--pattern", "hexagon", corpus("k4.txt")});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("diamond") != std::string::npos);

    TempDir dir("lwl_cli_errors");
    io::write_graph_file(dir.file("c40.txt"), families::cycle(40));
    const auto capacity = run({"refine", "--k", "4", dir.file("c40.txt")});
    CHECK(capacity.code == 2);
    CHECK(capacity.err.find("capacity exceeded") != std::string::npos);
    CHECK(capacity.err.find("40^4") != std::string::npos);

    std::ofstream(dir.file("bad.txt")) << "0 1\n1 two\n";
    const auto parse = run({"frag", "--all4", dir.file("bad.txt")});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 2") != std::string::npos);

    CHECK(run({"frag", corpus("c4.txt")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen writes seeded graphs") {
    const auto r = run({"gen", "--n", "10", "--p", "0.5", "--seed", "42"});
    REQUIRE(r.code == 0);
    CHECK(io::parse_edge_list(r.out) == io::gen_random(10, 0.5, 42));
    TempDir dir("lwl_cli_gen");
    const auto files = run({"gen", "--n", "8", "--p", "0.3", "--seed", "5", "--count", "3", "--format", "graph6",
                            "--out", dir.path().string()});
    REQUIRE(files.code == 0);
    const auto report = json::parse(files.out);
    REQUIRE(report["files"].size() == 3);
    CHECK(io::read_graph_file(dir.path() / "gnp_8_7.g6") == io::gen_random(8, 0.3, 7));
}

TEST_CASE("verify passes on the corpus and fails on a wrong golden value") {
    const auto ok = run({"verify", "--corpus", testing::corpus_dir().string()});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["passed"] == true);

    TempDir dir("lwl_cli_verify");
    std::filesystem::copy_file(testing::corpus_dir() / "c4.txt", dir.path() / "c4.txt");
    auto golden = testing::load_golden();
    json trimmed = {{"graphs", {{"c4.txt", golden["graphs"]["c4.txt"]}}}};
    trimmed["graphs"]["c4.txt"]["induced"]["c4"] = 2;
    std::ofstream(dir.path() / "golden.json") << trimmed.dump();
    const auto bad = run({"verify", "--corpus", dir.path().string()});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("golden c4/induced") != std::string::npos);
}

TEST_CASE("CLI verdicts match library verdicts") {
    const auto golden = testing::load_golden();
    for (const auto& pair : golden["pairs"]) {
        const auto a = pair["a"].get<std::string>();
        const auto b = pair["b"].get<std::string>();
        for (std::size_t k : {1, 2}) {
            const auto r = run({"compare", "--k", std::to_string(k), corpus(a), corpus(b)});
            const auto lib = compare(testing::corpus_graph(a), testing::corpus_graph(b), k);
            CHECK(r.code == (lib == Verdict::Equivalent ? 0 : 1));
        }
        const auto r = run({"compare", "--variant", "local", "--k", "1", "--r", "2", corpus(a), corpus(b)});
        const auto lib = compare_local(testing::corpus_graph(a), testing::corpus_graph(b), LocalVariant::Local, 1, 2);
        CHECK(r.code == (lib == Verdict::Equivalent ? 0 : 1));
    }
}

TEST_CASE("timing is opt-in") {
    const auto plain = run({"frag", "--all4", corpus("c4.txt")});
    CHECK(plain.out.find("timing_ms") == std::string::npos);
    const auto timed = run({"--timing", "frag", "--all4", corpus("c4.txt")});
    CHECK(json::parse(timed.out).contains("timing_ms"));
}
