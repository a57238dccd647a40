#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Graph6ParseError : std::runtime_error {
    explicit Graph6ParseError(const std::string& what, std::size_t line_no = 0)
        : std::runtime_error(what), line(line_no) {}
    std::size_t line;  // 1-based when parsing line files, 0 otherwise
};

/// graph6 text encoding. Header byte 63+n for n <= 62, '~' + 3 bytes of
/// 18-bit big-endian data for 63 <= n <= 258047. Payload is the upper
/// triangle column by column (x01, x02, x12, x03, ...), packed big-endian
/// into 6-bit groups, each offset by 63, zero-padded.
std::string to_graph6(const Graph& g);

Graph from_graph6(std::string_view s);

/// One graph per line. Blank lines and '>'-prefixed header lines are
/// skipped. Malformed lines raise Graph6ParseError with the line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace turan
