#include "idom/formats.hpp"

#include <cctype>
#include <sstream>

namespace idom {

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    } else {
        throw CapacityError("graph6 order too large");
    }
}

// Reads the size header, advancing pos.
int parse_size(std::string_view s, std::size_t& pos) {
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) throw FormatError("graph6 string truncated in size header");
    };
    need(1);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < kG6Lo || c > kG6Hi)
        throw FormatError(std::string("graph6 byte out of range: '") + s[pos] + "'");
    if (c != kG6Hi) {
        ++pos;
        return c - kG6Lo;
    }
    // '~' prefix: three more 6-bit bytes ('~~' 8-byte form is beyond capacity).
    need(2);
    if (static_cast<unsigned char>(s[pos + 1]) == kG6Hi)
        throw CapacityError("graph6 '~~' order form exceeds supported capacity");
    need(4);
    int n = 0;
    for (int i = 1; i <= 3; ++i) {
        int b = static_cast<unsigned char>(s[pos + i]);
        if (b < kG6Lo || b > kG6Hi)
            throw FormatError(std::string("graph6 byte out of range: '") + s[pos + i] + "'");
        n = (n << 6) | (b - kG6Lo);
    }
    pos += 4;
    return n;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, n);
    int bit = 5;  // high bit of the current 6-bit group
    int acc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) acc |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                bit = 5;
                acc = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(acc + kG6Lo));
    return out;
}

Graph from_graph6(std::string_view line) {
    // Tolerate the conventional file header marker.
    constexpr std::string_view kMarker = ">>graph6<<";
    if (line.substr(0, kMarker.size()) == kMarker) line.remove_prefix(kMarker.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw FormatError("empty graph6 string");

    std::size_t pos = 0;
    const int n = parse_size(line, pos);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (line.size() - pos != body)
        throw FormatError("graph6 body has " + std::to_string(line.size() - pos) +
                          " bytes, expected " + std::to_string(body) + " for n=" +
                          std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    long idx = 0;
    int acc = 0, bit = -1;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            if (bit < 0) {
                int c = static_cast<unsigned char>(line[pos++]);
                if (c < kG6Lo || c > kG6Hi)
                    throw FormatError(std::string("graph6 byte out of range: '") +
                                      static_cast<char>(c) + "'");
                acc = c - kG6Lo;
                bit = 5;
            }
            if ((acc >> bit) & 1) edges.emplace_back(i, j);
            --bit;
        }
    }
    // Bit-exact layout requires zero padding.
    if (bit >= 0 && (acc & ((1 << (bit + 1)) - 1)) != 0)
        throw FormatError("graph6 padding bits are not zero");
    return Graph::from_edge_list(n, edges);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw FormatError("edge list must start with 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long k = 0; k < m; ++k) {
        long u, v;
        if (!(in >> u >> v))
            throw FormatError("edge list ended after " + std::to_string(k) + " of " +
                              std::to_string(m) + " edges");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw FormatError(std::string("edge list rejected: ") + e.what());
    }
}

std::vector<Graph> parse_graphs(std::string_view content, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        std::size_t at = content.find_first_not_of(" \t\r\n");
        format = (at != std::string_view::npos && std::isdigit(static_cast<unsigned char>(content[at])))
                     ? GraphFormat::EdgeList
                     : GraphFormat::Graph6;
    }
    if (format == GraphFormat::EdgeList) return {from_edge_list_text(content)};

    std::vector<Graph> out;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        std::string_view line = content.substr(
            start, end == std::string_view::npos ? content.size() - start : end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(from_graph6(line));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw FormatError("no graphs in input");
    return out;
}

}  // namespace idom
