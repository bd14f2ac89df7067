/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_FORMATS_HH
#define HAMTOUGH_GUARD_FORMATS_HH 1

#include <hamtough/graph.hh>

#include <istream>
#include <string>
#include <string_view>

namespace hamtough
{
    /**
     * Decodes one graph6 line. Both the short header (n <= 62) and the
     * four-byte long header are accepted, but the order must not exceed
     * Graph::max_order. A leading ">>graph6<<" marker and trailing line
     * terminators are tolerated. Throws ParseError naming the byte offset.
     */
    auto parse_graph6(std::string_view text) -> Graph;

    /// Encodes g as graph6, without a newline.
    auto write_graph6(const Graph & g) -> std::string;

    /**
     * Reads "n m" followed by m lines "u v" with 0-based endpoints. Lines
     * starting with '#' are skipped. Duplicate edges are merged.
     */
    auto parse_edge_list(std::istream & in) -> Graph;
}

#endif
