/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/errors.hh>
#include <hamtough/formats.hh>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

using std::getline;
using std::istream;
using std::istringstream;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace hamtough
{
    namespace
    {
        constexpr int bias = 63;
        constexpr string_view marker = ">>graph6<<";

        auto decode_byte(string_view text, std::size_t at, std::size_t offset) -> int
        {
            unsigned char c = text[at];
            if (c < bias || c > bias + 63)
                throw ParseError("byte " + to_string(int(c)) + " outside graph6 range 63..126", offset + at);
            return c - bias;
        }
    }

    auto parse_graph6(string_view text) -> Graph
    {
        std::size_t offset = 0;
        if (text.starts_with(marker)) {
            text.remove_prefix(marker.size());
            offset = marker.size();
        }
        while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);

        if (text.empty())
            throw ParseError("empty graph6 string", offset);

        std::size_t pos = 0;
        long n = decode_byte(text, pos++, offset);
        if (n == 63) {
            if (text.size() < 4)
                throw ParseError("truncated long-form graph6 header", offset + text.size());
            if (text[1] == bias + 63)
                throw ParseError("graph6 orders beyond 258047 are not supported", offset + 1);
            n = 0;
            for (int i = 0; i < 3; ++i)
                n = (n << 6) | decode_byte(text, pos++, offset);
            if (n < 63)
                throw ParseError("long-form header used for order " + to_string(n), offset + 1);
        }
        if (n > Graph::max_order)
            throw ParseError("graph order " + to_string(n) + " exceeds supported maximum " + to_string(Graph::max_order), offset);

        std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
        std::size_t expected = pos + (bit_count + 5) / 6;
        if (text.size() != expected)
            throw ParseError("expected " + to_string(expected) + " bytes for order " + to_string(n) + ", got " + to_string(text.size()),
                offset + std::min(text.size(), expected));

        vector<VertexSet> rows(n);
        std::size_t bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                int chunk = decode_byte(text, pos + bit / 6, offset);
                if ((chunk >> (5 - bit % 6)) & 1) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }

        if (bit_count % 6 != 0) {
            std::size_t last = pos + bit_count / 6;
            int chunk = decode_byte(text, last, offset);
            int padding = 6 - static_cast<int>(bit_count % 6);
            if ((chunk & ((1 << padding) - 1)) != 0)
                throw ParseError("nonzero padding bits", offset + last);
        }

        return Graph::from_rows(std::move(rows));
    }

    auto write_graph6(const Graph & g) -> string
    {
        int n = g.order();
        string result;
        if (n <= 62)
            result.push_back(static_cast<char>(n + bias));
        else {
            result.push_back(static_cast<char>(bias + 63));
            for (int shift = 12; shift >= 0; shift -= 6)
                result.push_back(static_cast<char>(((n >> shift) & 63) + bias));
        }

        int chunk = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    result.push_back(static_cast<char>(chunk + bias));
                    chunk = 0;
                    filled = 0;
                }
            }
        if (filled != 0)
            result.push_back(static_cast<char>((chunk << (6 - filled)) + bias));

        return result;
    }

    auto parse_edge_list(istream & in) -> Graph
    {
        string line;
        std::size_t consumed = 0;
        auto next_line = [&](string & out) -> bool {
            while (getline(in, out)) {
                consumed += out.size() + 1;
                auto first = out.find_first_not_of(" \t\r");
                if (first == string::npos || out[first] == '#')
                    continue;
                return true;
            }
            return false;
        };

        if (! next_line(line))
            throw ParseError("missing \"n m\" header", consumed);
        long n = -1, m = -1;
        {
            istringstream header(line);
            if (! (header >> n >> m) || n < 0 || m < 0)
                throw ParseError("bad \"n m\" header", consumed - line.size() - 1);
        }
        if (n > Graph::max_order)
            throw ParseError("graph order " + to_string(n) + " exceeds supported maximum " + to_string(Graph::max_order), 0);

        GraphBuilder builder(static_cast<int>(n));
        for (long e = 0; e < m; ++e) {
            if (! next_line(line))
                throw ParseError("expected " + to_string(m) + " edges, got " + to_string(e), consumed);
            std::size_t line_start = consumed - line.size() - 1;
            istringstream edge(line);
            long u = -1, v = -1;
            if (! (edge >> u >> v) || u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError("bad edge line \"" + line + "\"", line_start);
            builder.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
        return builder.build();
    }
}
