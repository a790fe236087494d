#include "ad2pd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ad2pd {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            if (j > i) line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

template <class Int>
Int to_int(std::string_view token, std::size_t line, const char* what) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

double to_double(std::string_view token, std::size_t line) {
    // std::from_chars for double is not available everywhere; go through strtod.
    const std::string s(token);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw ParseError(line, "expected a number, got '" + s + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "missing header");
    const auto& header = lines.front();
    if (header.tokens.size() != 2 || (header.tokens[0] != "digraph" && header.tokens[0] != "graph")) {
        throw ParseError(header.number, "malformed header, expected 'digraph <n>' or 'graph <n>'");
    }
    const bool directed = header.tokens[0] == "digraph";
    const auto n = to_int<std::size_t>(header.tokens[1], header.number, "vertex count");

    std::vector<Member> members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<u> <v>'");
        const auto u = to_int<VertexId>(line.tokens[0], line.number, "vertex id");
        const auto v = to_int<VertexId>(line.tokens[1], line.number, "vertex id");
        if (u >= n || v >= n) throw ParseError(line.number, "vertex id out of range");
        if (u == v) throw ParseError(line.number, "self-loop");
        members.push_back({u, v});
    }
    return Graph(directed ? Orientation::directed : Orientation::undirected, n, std::move(members));
}

Graph parse_digraph(std::string_view text) {
    Graph g = parse_graph(text);
    if (!g.directed()) throw ParseError(0, "expected a digraph");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << (g.directed() ? "digraph " : "graph ") << g.vertex_count() << '\n';
    for (const auto& m : g.members()) os << m.u << ' ' << m.v << '\n';
    return os.str();
}

Decomposition parse_decomposition(const Graph& g, std::string_view text) {
    Decomposition x;
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<member_id_1> <member_id_2>'");
        const auto e = to_int<MemberId>(line.tokens[0], line.number, "member id");
        const auto f = to_int<MemberId>(line.tokens[1], line.number, "member id");
        auto p = make_two_path(g, e, f);
        if (!p) throw ParseError(line.number, "members do not form a 2-path");
        x.push_back(*p);
    }
    return x;
}

std::string format_decomposition(const Decomposition& x) {
    std::ostringstream os;
    for (const auto& p : x) os << p.first << ' ' << p.second << '\n';
    return os.str();
}

WeightMap parse_weights(std::string_view text) {
    WeightMap w;
    for (const auto& line : tokenize(text)) {
        if (line.tokens.size() != 3) throw ParseError(line.number, "expected '<member_id_1> <member_id_2> <cost>'");
        auto e = to_int<MemberId>(line.tokens[0], line.number, "member id");
        auto f = to_int<MemberId>(line.tokens[1], line.number, "member id");
        if (f < e) std::swap(e, f);
        w[{e, f}] = to_double(line.tokens[2], line.number);
    }
    return w;
}

double weight_of(const WeightMap& w, const TwoPath& p) {
    const auto it = w.find({p.low_member(), p.high_member()});
    return it == w.end() ? 0.0 : it->second;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace ad2pd
