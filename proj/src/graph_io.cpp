#include "matchtop/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "matchtop/errors.hpp"

namespace matchtop {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::map<std::string, int, std::less<>> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::pair<std::string_view, int>> tokens;  // token, 1-based column
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_space(line[i])) ++i;
            std::size_t start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (!tokens.empty()) {
            if (tokens.size() != 2)
                throw ParseError("expected two vertex tokens per edge line", line_no,
                                 tokens.size() > 2 ? tokens[2].second : tokens[0].second);
            auto intern = [&](std::string_view tok) {
                auto it = ids.find(tok);
                if (it != ids.end()) return it->second;
                int id = static_cast<int>(labels.size());
                labels.emplace_back(tok);
                ids.emplace(std::string(tok), id);
                return id;
            };
            int u = intern(tokens[0].first);
            int v = intern(tokens[1].first);
            if (u == v)
                throw ParseError("self-loop is not a valid edge", line_no, tokens[0].second);
            edges.emplace_back(u, v);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }

    if (static_cast<int>(labels.size()) > Graph::kMaxVertices)
        throw CapabilityError("edge list uses more than 64 vertices");
    Graph g = Graph::from_edges(static_cast<int>(labels.size()), edges);
    g.set_labels(std::move(labels));
    return g;
}

namespace {

// graph6 stores x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte,
// each byte offset by 63.
constexpr int kG6Offset = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
    // Trim trailing newline/space and an optional format header.
    std::string_view s = text;
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || is_space(s.back())))
        s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 input", 1, 1);

    std::size_t at = 0;
    auto take = [&]() -> int {
        if (at >= s.size()) throw ParseError("graph6 string truncated", 1, static_cast<int>(at) + 1);
        unsigned char c = static_cast<unsigned char>(s[at]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte", 1, static_cast<int>(at) + 1);
        ++at;
        return c - kG6Offset;
    };

    long long n;
    int first = take();
    if (first < 63) {
        n = first;
    } else {
        // Long form: 126 n1 n2 n3 encodes an 18-bit count.
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take();
    }
    if (n > Graph::kMaxVertices)
        throw CapabilityError("graph6 input has more than 64 vertices");

    const long long nbits = n * (n - 1) / 2;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(nbits));
    while (static_cast<long long>(bits.size()) < nbits) {
        int val = take();
        for (int b = 5; b >= 0; --b) bits.push_back((val >> b) & 1);
    }
    if (at != s.size()) throw ParseError("trailing bytes after graph6 data", 1,
                                         static_cast<int>(at) + 1);
    for (std::size_t i = static_cast<std::size_t>(nbits); i < bits.size(); ++i)
        if (bits[i]) throw ParseError("nonzero padding in graph6 data", 1,
                                      static_cast<int>(s.size()));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (bits[k]) edges.emplace_back(u, v);
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Offset));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Offset));
        out.push_back(static_cast<char>((n & 63) + kG6Offset));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Offset));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += g.label_of(e.u);
        out += ' ';
        out += g.label_of(e.v);
        out += '\n';
    }
    return out;
}

GraphFormat detect_format(std::string_view text) {
    // graph6 payloads are a single token of bytes in [63,126] with no interior
    // whitespace; anything else is treated as an edge list.
    std::size_t begin = 0, end = text.size();
    while (begin < end && (is_space(text[begin]) || text[begin] == '\n')) ++begin;
    while (end > begin && (is_space(text[end - 1]) || text[end - 1] == '\n')) --end;
    if (begin >= end) return GraphFormat::EdgeList;
    std::string_view body = text.substr(begin, end - begin);
    if (body.starts_with(">>graph6<<")) return GraphFormat::Graph6;
    for (char c : body) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) return GraphFormat::EdgeList;
    }
    // A lone decimal token like "12 34" is an edge list; a single token of
    // graph6 bytes is graph6.
    if (body.find(' ') != std::string_view::npos ||
        body.find('\t') != std::string_view::npos ||
        body.find('\n') != std::string_view::npos)
        return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) format = detect_format(text);
    if (format == GraphFormat::Graph6) return parse_graph6(text);
    return parse_edge_list(text);
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << g.label_of(v) << "\"];\n";
    for (const Edge& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
    os << "}\n";
    return os.str();
}

std::string matching_skeleton_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph M {\n";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        os << "  m" << i << " [label=\"" << g.label_of(edges[i].u) << "-"
           << g.label_of(edges[i].v) << "\"];\n";
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v)
                os << "  m" << i << " -- m" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::Auto: return "auto";
        case GraphFormat::EdgeList: return "edgelist";
        case GraphFormat::Graph6: return "graph6";
    }
    return "auto";
}

}  // namespace matchtop
