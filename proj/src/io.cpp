#include "regtool/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace regtool {

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("graph6 long form (n > 62) not supported; n=" + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0;
    int nbits = 0;
    // Upper triangle, column-major: bit (i,j) for j = 1..n-1, i = 0..j-1.
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph decode_graph6(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view s = text.substr(begin, end - begin);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    if (s[0] == '~') throw std::invalid_argument("graph6: long form ('~' header) not supported");
    unsigned char h = static_cast<unsigned char>(s[0]);
    if (h < 63 || h > 126)
        throw std::invalid_argument("graph6: bad header character at position 0");
    int n = h - 63;
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    std::size_t chars_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (s.size() < 1 + chars_needed)
        throw std::invalid_argument("graph6: truncated bit payload (expected " +
                                    std::to_string(1 + chars_needed) + " characters, got " +
                                    std::to_string(s.size()) + ")");
    if (s.size() > 1 + chars_needed)
        throw std::invalid_argument("graph6: unexpected trailing characters at position " +
                                    std::to_string(1 + chars_needed));
    Graph g(n);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t pos = 1 + static_cast<std::size_t>(bit / 6);
            unsigned char c = static_cast<unsigned char>(s[pos]);
            if (c < 63 || c > 126)
                throw std::invalid_argument("graph6: bad character at position " + std::to_string(pos));
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string export_dot(const Graph& g, const std::vector<std::string>* labels) {
    if (labels && static_cast<int>(labels->size()) != g.vertex_count())
        throw std::invalid_argument("label list size does not match vertex count");
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (labels) out << " [label=\"" << (*labels)[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) return true;
        }
        if (required) throw std::invalid_argument("edge list: unexpected end of input");
        return false;
    };

    next_line(true);
    std::istringstream head(line);
    long n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected \"n m\"");
    std::string junk;
    if (head >> junk)
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": trailing tokens");

    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        next_line(true);
        std::istringstream row(line);
        long u = 0, v = 0;
        if (!(row >> u >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        if (row >> junk)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": endpoint out of range (n=" +
                                        std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": loop pair rejected");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line(false))
        throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": extra data after " +
                                    std::to_string(m) + " edges");
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace regtool
