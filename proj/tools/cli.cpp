#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "lwl/counting.hpp"
#include "lwl/errors.hpp"
#include "lwl/fragmentation.hpp"
#include "lwl/io.hpp"
#include "lwl/local_wl.hpp"
#include "lwl/oracle.hpp"
#include "lwl/pattern.hpp"
#include "lwl/wl.hpp"

namespace lwl::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CommonOptions {
    int threads = 0;
    bool timing = false;
};

json histogram_json(const ColorHistogram& h) {
    json out = json::array();
    for (const auto& [color, count] : h) out.push_back({color, count});
    return out;
}

LocalVariant parse_variant(const std::string& name) {
    if (name == "local") return LocalVariant::Local;
    if (name == "layer") return LocalVariant::Layer;
    if (name == "recursive12") return LocalVariant::Recursive12;
    throw InputError("unknown variant '" + name + "'; expected plain, local, layer or recursive12");
}

CountMode parse_mode(const std::string& name) {
    if (name == "subgraph") return CountMode::Subgraph;
    if (name == "induced") return CountMode::Induced;
    throw InputError("unknown mode '" + name + "'; expected subgraph or induced");
}

std::optional<std::size_t> star_size(const Pattern& p) {
    if (p.name == "edge") return 1;
    if (p.name == "p3") return 2;
    if (p.name == "star3") return 3;
    if (p.name.starts_with("star:")) return p.size() - 1;
    return std::nullopt;
}

// Dedicated closed forms and fragment plans. nullopt when the pattern/mode pair has none.
std::optional<std::uint64_t> fast_count(const Graph& g, const Pattern& p, CountMode mode) {
    const TriangleCounter triangles = [](const Graph& h) { return count_triangles_fast(h, Exec::Serial); };
    if (p.name == "triangle") return count_triangles_fast(g);
    if (p.name == "k4") return clique_lift(g, triangles);
    if (mode == CountMode::Subgraph) {
        if (p.name == "c4") return count_c4_subgraph(g);
        if (p.name == "2k2") return closed_form_star_and_matching(g, 1).matching2;
        if (const auto s = star_size(p)) return closed_form_star_and_matching(g, *s).star;
        return std::nullopt;
    }
    const auto id = small_pattern_from_name(p.name);
    if (!id) return std::nullopt;
    if (*id == SmallPatternId::Paw || *id == SmallPatternId::Diamond || *id == SmallPatternId::Star3) {
        return frag_count(g, *id);
    }
    return ind_count_le4(g)[*id];
}

json census_json(const InducedCensus& census) {
    json counts = json::object();
    for (auto id : all_small_patterns()) counts[std::string(name_of(id))] = census[id];
    return counts;
}

class Timer {
  public:
    explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    void stamp(json& report) const {
        if (!enabled_) return;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }

  private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

void emit(std::ostream& out, const json& report) { out << report.dump(2) << "\n"; }

struct FileCheck {
    std::string file;
    std::size_t checks = 0;
    std::vector<std::string> mismatches;

    template <typename A, typename B>
    void expect(const std::string& what, const A& got, const B& want) {
        ++checks;
        if (!(got == want)) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", expected " << want;
            mismatches.push_back(msg.str());
        }
    }
};

void verify_graph(const Graph& g, const fs::path& path, const json* golden, FileCheck& check) {
    check.expect("round trip", io::parse_graph(io::serialize(g, io::format_for(path)), io::format_for(path)) == g,
                 true);
    for (const auto& p : pattern_library()) {
        for (auto mode : {CountMode::Subgraph, CountMode::Induced}) {
            const auto oracle_total = oracle::count(g, p, mode);
            const auto label = p.name + "/" + to_string(mode);
            check.expect("count_pattern " + label, count_pattern(g, p, mode, Exec::Serial).total, oracle_total);
            if (const auto fast = fast_count(g, p, mode)) check.expect("fast " + label, *fast, oracle_total);
            if (golden) {
                const auto& table = golden->at(mode == CountMode::Subgraph ? "subgraph" : "induced");
                if (table.contains(p.name)) check.expect("golden " + label, oracle_total, table.at(p.name).get<std::uint64_t>());
            }
        }
    }
    const auto census = ind_count_le4(g, Exec::Serial);
    for (auto id : all_small_patterns()) {
        check.expect("ind_count_le4 " + std::string(name_of(id)), census[id],
                     oracle::count(g, find_pattern(name_of(id)), CountMode::Induced));
    }
    check.expect("partition identities", census.partition_identities_hold(g.n()), true);
    if (golden) {
        check.expect("golden n", g.n(), golden->at("n").get<std::size_t>());
        check.expect("golden m", g.num_edges(), golden->at("m").get<std::size_t>());
    }
}

int run_verify(const std::string& corpus, const CommonOptions& common, std::ostream& out) {
    const Timer timer(common.timing);
    const fs::path dir(corpus);
    if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + corpus);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".txt" || ext == ".g6")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    json golden = json::object();
    if (fs::exists(dir / "golden.json")) {
        std::ifstream in(dir / "golden.json");
        golden = json::parse(in);
    }
    std::vector<FileCheck> results(files.size());
    for_each_index(files.size(), Exec::Parallel, [&](std::size_t i) {
        auto& check = results[i];
        check.file = files[i].filename().string();
        const json& table = golden;
        const json* entry = nullptr;
        if (table.contains("graphs") && table.at("graphs").contains(check.file)) entry = &table.at("graphs").at(check.file);
        try {
            verify_graph(io::read_graph_file(files[i]), files[i], entry, check);
        } catch (const std::exception& e) {
            check.mismatches.push_back(std::string("error: ") + e.what());
        }
    });
    json report = {{"command", "verify"}, {"corpus", corpus}};
    json file_reports = json::array();
    bool passed = !files.empty();
    std::size_t total_checks = 0;
    for (const auto& r : results) {
        passed = passed && r.mismatches.empty();
        total_checks += r.checks;
        file_reports.push_back({{"file", r.file}, {"checks", r.checks}, {"mismatches", r.mismatches}});
    }
    report["files"] = file_reports;
    report["checks"] = total_checks;
    report["passed"] = passed;
    timer.stamp(report);
    emit(out, report);
    return passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Localized Weisfeiler-Leman refinement and exact local subgraph counting", "lwl"};
    app.require_subcommand(1);
    CommonOptions common;
    if (const char* env = std::getenv("LWL_THREADS")) common.threads = std::atoi(env);
    app.add_option("--threads", common.threads, "OpenMP threads (default: LWL_THREADS or all cores)");
    app.add_flag("--timing", common.timing, "Add wall-clock timing to the report");

    std::size_t k = 1;
    std::size_t r = 1;
    std::string variant = "plain";

    auto* refine = app.add_subcommand("refine", "Stable coloring of one graph");
    std::string refine_graph;
    refine->add_option("--k", k, "WL dimension")->check(CLI::PositiveNumber);
    refine->add_option("--variant", variant, "plain|local|layer|recursive12");
    refine->add_option("--r", r, "Ball radius for local and layer")->check(CLI::PositiveNumber);
    refine->add_option("graph", refine_graph)->required();

    auto* compare_cmd = app.add_subcommand("compare", "Equivalence verdict for two graphs (exit 0 equivalent, 1 distinguished)");
    std::string g1_path;
    std::string g2_path;
    compare_cmd->add_option("--k", k, "WL dimension")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--variant", variant, "plain|local|layer|recursive12");
    compare_cmd->add_option("--r", r, "Ball radius for local and layer")->check(CLI::PositiveNumber);
    compare_cmd->add_option("g1", g1_path)->required();
    compare_cmd->add_option("g2", g2_path)->required();

    auto* count_cmd = app.add_subcommand("count", "Exact count of one pattern");
    std::string pattern_name;
    std::string mode_name = "subgraph";
    std::string method = "local";
    std::string count_graph;
    count_cmd->add_option("--pattern", pattern_name)->required();
    count_cmd->add_option("--mode", mode_name, "subgraph|induced");
    count_cmd->add_option("--method", method, "local|oracle|fast")->check(CLI::IsMember({"local", "oracle", "fast"}));
    count_cmd->add_option("graph", count_graph)->required();

    auto* frag_cmd = app.add_subcommand("frag", "Induced counts of all graphs on 2 to 4 vertices");
    bool all4 = false;
    std::string frag_graph;
    frag_cmd->add_flag("--all4", all4, "Report all 17 counts")->required();
    frag_cmd->add_option("graph", frag_graph)->required();

    auto* gen_cmd = app.add_subcommand("gen", "Seeded G(n, p) graphs");
    std::size_t gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t seed = 0;
    std::size_t copies = 1;
    std::string out_dir;
    std::string gen_format = "edge-list";
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--p", gen_p)->required();
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--count", copies, "Number of graphs; graph i uses seed + i")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", out_dir, "Write files into this directory instead of stdout");
    gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"edge-list", "graph6"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check every counting path against the oracle on a corpus");
    std::string corpus;
    verify_cmd->add_option("--corpus", corpus)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (common.threads > 0) set_threads(common.threads);
        const Timer timer(common.timing);

        if (*refine) {
            const Graph g = io::read_graph_file(refine_graph);
            json report = {{"command", "refine"}, {"graph", refine_graph}, {"variant", variant}, {"n", g.n()}};
            if (variant == "plain") {
                const Coloring c = k == 1 ? refine_1wl(g) : refine_kwl(g, k);
                report["k"] = k;
                report["rounds"] = c.rounds;
                report["stable"] = c.stable;
                report["classes"] = c.num_classes();
                report["histogram"] = histogram_json(histogram(c));
            } else {
                const auto v = parse_variant(variant);
                std::vector<std::uint32_t> attributes;
                if (v == LocalVariant::Local) {
                    attributes = local_kwl(g, k, r).attribute;
                } else if (v == LocalVariant::Layer) {
                    attributes = layer_attributes_batch(std::span<const Graph>(&g, 1), k, r).front();
                } else {
                    const Coloring c = recursive_12_wl(g);
                    attributes = c.colors;
                    report["rounds"] = c.rounds;
                }
                if (v != LocalVariant::Recursive12) {
                    report["k"] = k;
                    report["r"] = r;
                }
                auto sorted = attributes;
                std::sort(sorted.begin(), sorted.end());
                report["classes"] = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
                report["attributes"] = attributes;
            }
            timer.stamp(report);
            emit(out, report);
            return kExitOk;
        }

        if (*compare_cmd) {
            const Graph g1 = io::read_graph_file(g1_path);
            const Graph g2 = io::read_graph_file(g2_path);
            const Verdict verdict = variant == "plain" ? compare(g1, g2, k)
                                                       : compare_local(g1, g2, parse_variant(variant), k, r);
            json report = {{"command", "compare"}, {"g1", g1_path}, {"g2", g2_path}, {"variant", variant},
                           {"verdict", to_string(verdict)}};
            if (variant != "recursive12") report["k"] = k;
            if (variant == "local" || variant == "layer") report["r"] = r;
            timer.stamp(report);
            emit(out, report);
            return verdict == Verdict::Equivalent ? kExitOk : kExitDistinguished;
        }

        if (*count_cmd) {
            const Graph g = io::read_graph_file(count_graph);
            const Pattern p = find_pattern(pattern_name);
            const CountMode mode = parse_mode(mode_name);
            json report = {{"command", "count"}, {"graph", count_graph}, {"pattern", p.name},
                           {"mode", to_string(mode)},  {"method", method}};
            if (method == "local") {
                const auto result = count_pattern(g, p, mode);
                report["total"] = result.total;
                report["orbit_size"] = result.orbit_size;
                report["per_root"] = result.per_root;
            } else if (method == "oracle") {
                report["total"] = oracle::count(g, p, mode);
            } else {
                const auto total = fast_count(g, p, mode);
                if (!total) {
                    throw InputError("no fast method for pattern " + p.name + " in " + to_string(mode) +
                                     " mode; use --method local");
                }
                report["total"] = *total;
            }
            timer.stamp(report);
            emit(out, report);
            return kExitOk;
        }

        if (*frag_cmd) {
            const Graph g = io::read_graph_file(frag_graph);
            const auto census = ind_count_le4(g);
            json report = {{"command", "frag"},
                           {"graph", frag_graph},
                           {"n", g.n()},
                           {"counts", census_json(census)},
                           {"partition_identities", census.partition_identities_hold(g.n())}};
            timer.stamp(report);
            emit(out, report);
            return kExitOk;
        }

        if (*gen_cmd) {
            const auto format = gen_format == "graph6" ? io::GraphFormat::Graph6 : io::GraphFormat::EdgeList;
            if (out_dir.empty()) {
                for (std::size_t i = 0; i < copies; ++i) {
                    if (copies > 1 && format == io::GraphFormat::EdgeList) out << "# seed " << seed + i << "\n";
                    out << io::serialize(io::gen_random(gen_n, gen_p, seed + i), format);
                }
                return kExitOk;
            }
            fs::create_directories(out_dir);
            json files = json::array();
            for (std::size_t i = 0; i < copies; ++i) {
                const Graph g = io::gen_random(gen_n, gen_p, seed + i);
                const auto name = "gnp_" + std::to_string(gen_n) + "_" + std::to_string(seed + i) +
                                  (format == io::GraphFormat::Graph6 ? ".g6" : ".txt");
                io::write_graph_file(fs::path(out_dir) / name, g);
                files.push_back({{"file", name}, {"seed", seed + i}, {"edges", g.num_edges()}});
            }
            json report = {{"command", "gen"}, {"n", gen_n}, {"p", gen_p}, {"files", files}};
            timer.stamp(report);
            emit(out, report);
            return kExitOk;
        }

        return run_verify(corpus, common, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const CapacityError& e) {
        err << "capacity exceeded: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitError;
}

}  // namespace lwl::cli
