#include "turan/graph6.hpp"

#include <istream>

namespace turan {

namespace {

constexpr int kMaxN = 258047;

void append_header(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxN) throw std::invalid_argument("graph too large for graph6");
    std::string out;
    append_header(out, n);
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw Graph6ParseError("empty graph6 string");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw Graph6ParseError("truncated graph6 string");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw Graph6ParseError("invalid graph6 byte");
        return c - 63;
    };
    long n;
    int first = next();
    if (first == 63) {  // '~'
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == '~')
            throw Graph6ParseError("graph6 order above supported range");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n < 63) throw Graph6ParseError("non-canonical graph6 header");
    } else {
        n = first;
    }
    if (n > kMaxN) throw Graph6ParseError("graph6 order above supported range");
    Graph g(static_cast<int>(n));
    int group = 0, remaining = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (remaining == 0) {
                group = next();
                remaining = 6;
            }
            if ((group >> (remaining - 1)) & 1) g.add_edge(row, col);
            --remaining;
        }
    }
    if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0)
        throw Graph6ParseError("nonzero padding bits");
    if (pos != s.size()) throw Graph6ParseError("trailing bytes after graph6 data");
    return g;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '>') continue;
        try {
            out.push_back(from_graph6(line));
        } catch (const Graph6ParseError& e) {
            throw Graph6ParseError(std::string(e.what()) + " at line " + std::to_string(line_no), line_no);
        }
    }
    return out;
}

}  // namespace turan
