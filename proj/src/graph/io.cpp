#include "tripm/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace tripm {

namespace {

constexpr int kBias = 63;
constexpr std::size_t kMaxOrder = 258047;

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6: truncated input", 1, pos);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", 1, pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty line", 1, 0);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] == '~') {
        if (line.size() > 1 && line[1] == '~')
            throw ParseError("graph6: orders above 258047 are not supported", 1, 1);
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | static_cast<std::size_t>(sextet(line, pos));
        if (n < 63) throw ParseError("graph6: long order form used for n < 63", 1, 1);
    } else {
        n = static_cast<std::size_t>(sextet(line, 0));
        pos = 1;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() < pos + bytes)
        throw ParseError("graph6: truncated adjacency data (expected " + std::to_string(bytes) +
                             " bytes)",
                         1, line.size());
    if (line.size() > pos + bytes) throw ParseError("graph6: trailing bytes", 1, pos + bytes);

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int word = sextet(line, pos + k / 6);
            if ((word >> (5 - k % 6)) & 1)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    for (; k < bytes * 6; ++k) {
        int word = sextet(line, pos + k / 6);
        if ((word >> (5 - k % 6)) & 1)
            throw ParseError("graph6: nonzero padding bit", 1, pos + k / 6);
    }
    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    if (!g.is_simple()) throw UnsupportedMultigraph("graph6 cannot encode parallel edges");
    const std::size_t n = g.vertex_count();
    if (n > kMaxOrder) throw std::invalid_argument("graph6: order too large");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<char> adj(bits, 0);
    // Bit for pair i < j sits at j(j-1)/2 + i (column-wise upper triangle).
    for (const auto& e : g.edges()) adj[std::size_t{e.v} * (e.v - 1) / 2 + e.u] = 1;
    for (std::size_t k = 0; k < bits; k += 6) {
        int word = 0;
        for (std::size_t b = 0; b < 6; ++b) word = (word << 1) | (k + b < bits ? adj[k + b] : 0);
        out.push_back(static_cast<char>(word + kBias));
    }
    return out;
}

namespace {

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    // Next non-blank line; false at end of input.
    bool next(std::string_view& line, std::size_t& start) {
        while (pos < text.size()) {
            start = pos;
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
        }
        return false;
    }
};

std::vector<std::size_t> read_integers(std::string_view line, std::size_t expected, std::size_t line_no,
                                       std::size_t start) {
    std::vector<std::size_t> values;
    std::size_t i = 0;
    while (true) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
            throw ParseError("edge list: expected a non-negative integer", line_no, start + i);
        values.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    if (values.size() != expected)
        throw ParseError("edge list: expected " + std::to_string(expected) + " integers, got " +
                             std::to_string(values.size()),
                         line_no, start);
    return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    LineCursor cursor{text};
    std::string_view line;
    std::size_t start = 0;
    if (!cursor.next(line, start)) throw ParseError("edge list: missing \"n m\" header", 1, 0);
    auto header = read_integers(line, 2, cursor.line_no, start);
    const std::size_t n = header[0];
    const std::size_t m = header[1];
    if (n > kMaxOrder) throw ParseError("edge list: vertex count too large", cursor.line_no, start);

    std::vector<std::pair<VertexId, VertexId>> edges;
    while (cursor.next(line, start)) {
        auto uv = read_integers(line, 2, cursor.line_no, start);
        if (edges.size() == m)
            throw ParseError("edge list: more than " + std::to_string(m) + " edge lines", cursor.line_no,
                             start);
        if (uv[0] >= n || uv[1] >= n)
            throw ParseError("edge list: vertex index out of range", cursor.line_no, start);
        if (uv[0] == uv[1]) throw ParseError("edge list: loop edge", cursor.line_no, start);
        edges.emplace_back(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
    }
    if (edges.size() != m)
        throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()),
                         cursor.line_no, text.size());
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

}  // namespace tripm
