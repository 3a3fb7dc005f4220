#include "indpoly/graph_io.hpp"

#include <cstdint>
#include <istream>
#include <sstream>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: character outside the printable 6-bit range", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.starts_with(kHeader)) base = kHeader.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    std::string_view s = line.substr(base);
    if (s.empty()) throw ParseError("graph6: empty input", base);

    // Offsets reported below are relative to the original line.
    auto at = [&](std::size_t i) { return sextet(line, base + i); };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (s[0] != '~') {
        n = static_cast<std::uint64_t>(at(0));
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw ParseError("graph6: truncated order field", base + s.size());
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(at(i));
        pos = 4;
    } else {
        if (s.size() < 8) throw ParseError("graph6: truncated order field", base + s.size());
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(at(i));
        pos = 8;
    }
    if (n > 100000) throw ParseError("graph6: order too large", base);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos != want)
        throw ParseError("graph6: expected " + std::to_string(want) + " adjacency bytes, found " +
                             std::to_string(s.size() - pos),
                         base + std::min(s.size(), pos + want));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            const int byte = at(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(int(i), int(j));
        }
    }
    if (want > 0) {
        const int pad = static_cast<int>(want * 6 - bits);
        const int last = at(pos + want - 1);
        if (pad > 0 && (last & ((1 << pad) - 1)) != 0)
            throw ParseError("graph6: nonzero padding bits", base + pos + want - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + 63));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(char(((n >> shift) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(int(i), int(j)) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first) || first[0] == '#') continue;
        ss.clear();
        ss.str(line);
        if (n < 0) {
            if (!(ss >> n) || n < 0) throw ParseError("edge list: bad order on line " + std::to_string(lineno), 0);
            continue;
        }
        int u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw ParseError("edge list: expected 'u v' on line " + std::to_string(lineno), 0);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: invalid edge on line " + std::to_string(lineno), 0);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: missing order line", 0);
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace indpoly
