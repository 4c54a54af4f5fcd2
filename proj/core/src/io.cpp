#include "cleangraph/io.hpp"

#include <charconv>
#include <sstream>

namespace cleangraph {

namespace {

constexpr int kMaxVertices = 65535;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::uint64_t bit_count(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

GraphDocument parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    std::size_t base = 0;
    if (text.substr(0, 2) == ">>") {
        if (text.substr(0, kGraph6Header.size()) != kGraph6Header)
            throw ParseError(ParseErrorKind::MalformedHeader, 0, "unrecognised >>...<< header");
        text.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    if (text.empty())
        throw ParseError(ParseErrorKind::MalformedHeader, base, "missing vertex count");

    auto sextet = [&](std::size_t i) -> std::uint64_t {
        unsigned char c = text[i];
        if (c < 63 || c > 126)
            throw ParseError(ParseErrorKind::OutOfRangeByte, base + i,
                             "byte " + std::to_string(base + i) + " outside 63..126");
        return c - 63;
    };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = sextet(0);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4)
            throw ParseError(ParseErrorKind::MalformedHeader, base + text.size(),
                             "truncated vertex count");
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
        if (n < 63)
            throw ParseError(ParseErrorKind::MalformedHeader, base,
                             "over-long encoding of a small vertex count");
    } else {
        if (text.size() < 8)
            throw ParseError(ParseErrorKind::MalformedHeader, base + text.size(),
                             "truncated vertex count");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
        pos = 8;
        if (n < 258048)
            throw ParseError(ParseErrorKind::MalformedHeader, base,
                             "over-long encoding of a small vertex count");
    }
    if (n > kMaxVertices)
        throw ParseError(ParseErrorKind::MalformedHeader, base,
                         "vertex count " + std::to_string(n) + " exceeds the supported maximum");

    const std::uint64_t bits = bit_count(n);
    const std::uint64_t need = (bits + 5) / 6;
    if (text.size() - pos < need)
        throw ParseError(ParseErrorKind::TruncatedBits, base + text.size(),
                         "adjacency bits end early: need " + std::to_string(need) +
                             " bytes, have " + std::to_string(text.size() - pos));
    if (text.size() - pos > need)
        throw ParseError(ParseErrorKind::TrailingBytes, base + pos + need,
                         "trailing bytes after the adjacency bits");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (int j = 1; j < int(n); ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            std::uint64_t value = sextet(pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    for (std::uint64_t pad = bits; pad < need * 6; ++pad)
        if ((sextet(pos + pad / 6) >> (5 - pad % 6)) & 1)
            throw ParseError(ParseErrorKind::NonzeroPadding, base + pos + pad / 6,
                             "padding bits must be zero");

    GraphDocument doc;
    doc.graph = Graph::from_edges(int(n), edges);
    doc.format = GraphFormat::Graph6;
    return doc;
}

std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = std::uint64_t(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + 63));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + 63));
    }
    int value = 0, filled = 0;
    for (int j = 1; j < int(n); ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(value + 63));
                value = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(char((value << (6 - filled)) + 63));
    return out;
}

namespace {

int parse_int(std::string_view token, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(ParseErrorKind::BadToken, line_no,
                         "line " + std::to_string(line_no) + ": not an integer: '" +
                             std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

GraphDocument parse_edge_list(std::string_view text) {
    std::optional<int> declared;
    std::vector<Edge> edges;
    int max_seen = -1;

    std::size_t line_no = 0;
    bool first_content = true;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (first_content && tokens[0] == "n") {
            if (tokens.size() != 2)
                throw ParseError(ParseErrorKind::BadToken, line_no,
                                 "line " + std::to_string(line_no) +
                                     ": vertex count line must be 'n <count>'");
            declared = parse_int(tokens[1], line_no);
            if (*declared < 0 || *declared > kMaxVertices)
                throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                                 "line " + std::to_string(line_no) + ": bad vertex count");
            first_content = false;
            continue;
        }
        first_content = false;

        if (tokens.size() != 2)
            throw ParseError(ParseErrorKind::BadToken, line_no,
                             "line " + std::to_string(line_no) +
                                 ": expected two endpoints, got " +
                                 std::to_string(tokens.size()) + " tokens");
        int u = parse_int(tokens[0], line_no);
        int v = parse_int(tokens[1], line_no);
        if (u == v)
            throw ParseError(ParseErrorKind::SelfLoop, line_no,
                             "line " + std::to_string(line_no) + ": self-loop at " +
                                 std::to_string(u));
        for (int x : {u, v}) {
            if (x < 0 || x > kMaxVertices || (declared && x >= *declared))
                throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                                 "line " + std::to_string(line_no) + ": vertex " +
                                     std::to_string(x) + " out of range");
            max_seen = std::max(max_seen, x);
        }
        edges.emplace_back(u, v);
    }

    GraphDocument doc;
    doc.graph = Graph::from_edges(declared ? *declared : max_seen + 1, edges);
    doc.format = GraphFormat::EdgeList;
    return doc;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::Graph6 ? emit_graph6(g) : emit_edge_list(g);
}

}  // namespace cleangraph
