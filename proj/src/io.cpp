#include "lwl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "lwl/errors.hpp"

namespace lwl::io {

const char* to_string(GraphFormat f) { return f == GraphFormat::EdgeList ? "edge-list" : "graph6"; }

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
    return value;
}

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::uint64_t> header;
    std::vector<Edge> edges;
    std::uint64_t max_id_plus_one = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto toks = tokens(line);
        if (toks.size() != 2) throw ParseError("expected two fields, got " + std::to_string(toks.size()), line_no);
        if (toks[0] == "n") {
            if (header) throw ParseError("duplicate 'n' header", line_no);
            if (!edges.empty()) throw ParseError("'n' header must precede the edges", line_no);
            const auto count = to_uint(toks[1]);
            if (!count || *count > kMaxVertices) throw ParseError("bad vertex count '" + std::string(toks[1]) + "'", line_no);
            header = count;
            continue;
        }
        const auto u = to_uint(toks[0]);
        const auto v = to_uint(toks[1]);
        if (!u || !v || *u >= kMaxVertices || *v >= kMaxVertices) {
            throw ParseError("expected two vertex ids, got '" + std::string(line) + "'", line_no);
        }
        if (header && (*u >= *header || *v >= *header)) {
            throw ParseError("vertex id out of range for n = " + std::to_string(*header), line_no);
        }
        if (*u == *v) throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(*u));
        max_id_plus_one = std::max({max_id_plus_one, *u + 1, *v + 1});
        edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    }
    return Graph::from_edges(header ? *header : max_id_plus_one, edges);
}

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    for (char c : text) {
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", 1);
    }
    std::size_t i = 0;
    auto take = [&]() -> std::uint64_t {
        if (i >= text.size()) throw ParseError("graph6 record truncated", 1);
        return static_cast<std::uint64_t>(text[i++] - 63);
    };
    std::uint64_t n = take();
    if (n == 63) {
        n = 0;
        std::size_t digits = 3;
        if (i < text.size() && text[i] == 126) {
            ++i;
            digits = 6;
        }
        for (std::size_t d = 0; d < digits; ++d) n = (n << 6) | take();
    }
    if (n > kMaxVertices) throw ParseError("graph6 vertex count too large", 1);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - i != expected) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - i) + " bytes, expected " +
                             std::to_string(expected),
                         1);
    }
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex a = 0; a < j; ++a, ++k) {
            const auto byte = static_cast<std::uint64_t>(text[i + k / 6] - 63);
            if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(a, j);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize(const Graph& g, GraphFormat format) {
    std::string out;
    if (format == GraphFormat::EdgeList) {
        out = "n " + std::to_string(g.n()) + "\n";
        for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }
    const std::uint64_t n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex a = 0; a < j; ++a) {
            acc = (acc << 1) | (g.adjacent(a, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    out.push_back('\n');
    return out;
}

GraphFormat format_for(const std::filesystem::path& path) {
    return path.extension() == ".g6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open graph file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), format_for(path));
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write graph file " + path.string());
    out << serialize(g, format_for(path));
}

Graph gen_random(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < p) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace lwl::io
