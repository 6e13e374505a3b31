#include "seidel/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <vector>

namespace seidel {

namespace {

struct Line {
    std::size_t number = 0;  // 1-based
    std::string_view text;   // comment-stripped, trimmed
};

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Non-blank lines with '#' comments removed.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (!line.empty()) out.push_back({lineno, line});
    }
    return out;
}

// Splits on runs of blanks; returns false on a non-integer token.
bool parse_ints(std::string_view s, std::vector<long>& out) {
    out.clear();
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == s.size()) break;
        std::size_t end = pos;
        while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
        long value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
        if (ec != std::errc{} || ptr != s.data() + end) return false;
        out.push_back(value);
        pos = end;
    }
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty input, expected header \"n <order>\"");

    const Line& header = lines.front();
    std::vector<long> ints;
    if (header.text.substr(0, 1) != "n" ||
        !parse_ints(header.text.substr(1), ints) || ints.size() != 1)
        throw parse_error(header.number, "expected header \"n <order>\"");
    long n = ints[0];
    if (n < 1) throw parse_error(header.number, "order must be positive");

    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (!parse_ints(line.text, ints) || ints.size() != 2)
            throw parse_error(line.number, "expected an edge \"i j\"");
        long i = ints[0], j = ints[1];
        if (i == j) throw parse_error(line.number, "self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n)
            throw parse_error(line.number, "vertex index out of range for order " + std::to_string(n));
        Edge e{static_cast<int>(i), static_cast<int>(j)};
        for (const Edge& seen : edges)
            if (seen == e) throw parse_error(line.number, "duplicate edge");
        edges.push_back(e);
    }
    return {static_cast<int>(n), std::move(edges)};
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

Graph parse_graph6(std::string_view text) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    auto lines = content_lines(text);
    if (lines.empty()) throw parse_error(1, "empty graph6 input");
    std::string_view s = lines.front().text;
    const std::size_t lineno = lines.front().number;
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());

    auto next = [&]() -> int {
        if (s.empty()) throw parse_error(lineno, "truncated graph6 string");
        unsigned char c = static_cast<unsigned char>(s.front());
        s.remove_prefix(1);
        if (c < 63 || c > 126) throw parse_error(lineno, "invalid graph6 byte");
        return c - 63;
    };

    long n = next();
    if (n == 63) {  // '~': 18-bit order in the next three bytes
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
        if (n >> 12 == 63) throw parse_error(lineno, "graph6 orders beyond 2^18 not supported");
    }
    if (n < 1) throw parse_error(lineno, "graph6 order must be positive");

    std::vector<Edge> edges;
    int bits = 0, have = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            if (have == 0) {
                bits = next();
                have = 6;
            }
            --have;
            if ((bits >> have) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    if (!strip(s).empty()) throw parse_error(lineno, "trailing bytes after graph6 string");
    return {static_cast<int>(n), std::move(edges)};
}

std::string write_graph6(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int bits = 0, have = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++have == 6) {
                out += static_cast<char>(bits + 63);
                bits = have = 0;
            }
        }
    if (have > 0) out += static_cast<char>((bits << (6 - have)) + 63);
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    auto lines = content_lines(text);
    if (!lines.empty()) {
        std::string_view first = lines.front().text;
        std::vector<long> ints;
        if (first.substr(0, 1) == "n" && first.size() > 1 &&
            std::isspace(static_cast<unsigned char>(first[1])) &&
            parse_ints(first.substr(1), ints) && ints.size() == 1)
            return parse_edge_list(text);
    }
    return parse_graph6(text);
}

}  // namespace seidel
