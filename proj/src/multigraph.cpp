#include "tecc/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace tecc {

Multigraph::Multigraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

EdgeId Multigraph::add_edge(Vertex a, Vertex b) {
    if (a >= vertex_count() || b >= vertex_count()) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) {
        throw std::invalid_argument("self-loops are not stored");
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b});
    adjacency_[a].push_back({id, b});
    adjacency_[b].push_back({id, a});
    return id;
}

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

bool parse_count(std::string_view s, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    ParsedGraph result;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t edges_seen = 0;
    std::size_t line_no = 0;
    std::size_t last_line = 0;
    std::vector<std::pair<Vertex, Vertex>> pending;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        last_line = line_no;

        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields[0] == "c") continue;

        if (fields[0] == "p") {
            if (have_header) throw ParseError("duplicate header", line_no);
            if (fields.size() != 3 || !parse_count(fields[1], n) || !parse_count(fields[2], m)) {
                throw ParseError("malformed header", line_no);
            }
            if (n >= kNoVertex || m >= kNoEdge) throw ParseError("graph too large", line_no);
            have_header = true;
            pending.reserve(m);
            continue;
        }
        if (fields[0] == "e") {
            if (!have_header) throw ParseError("edge before header", line_no);
            std::uint64_t u = 0;
            std::uint64_t v = 0;
            if (fields.size() != 3 || !parse_count(fields[1], u) || !parse_count(fields[2], v)) {
                throw ParseError("malformed edge line", line_no);
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("vertex index out of range", line_no);
            }
            ++edges_seen;
            if (edges_seen > m) throw ParseError("edge count mismatch", line_no);
            pending.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw ParseError("unrecognized line", line_no);
    }

    if (!have_header) throw ParseError("missing header", last_line == 0 ? 1 : last_line);
    if (edges_seen != m) throw ParseError("edge count mismatch", last_line);

    result.graph = Multigraph(n);
    for (auto [u, v] : pending) {
        if (u == v) {
            ++result.log.removed_self_loops;
            continue;
        }
        result.graph.add_edge(u, v);
    }
    for (Vertex v = 0; v < n; ++v) {
        if (result.graph.degree(v) == 0) result.log.isolated_vertices.push_back(v);
    }
    return result;
}

ParsedGraph parse_graph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(std::string_view(text));
}

std::string serialize_graph(const Multigraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
    }
    return out.str();
}

std::vector<std::vector<Vertex>> connected_components(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        blocks.emplace_back();
        auto& block = blocks.back();
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            block.push_back(v);
            for (const HalfEdge& h : g.adjacency(v)) {
                if (!seen[h.to]) {
                    seen[h.to] = true;
                    stack.push_back(h.to);
                }
            }
        }
        std::sort(block.begin(), block.end());
    }
    return blocks;
}

Multigraph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Multigraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

Multigraph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return make_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

}  // namespace tecc
