/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/cycles.hh>
#include <hamtough/errors.hh>

#include <algorithm>
#include <stdexcept>
#include <string>

using std::function;
using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace hamtough
{
    auto Cycle::canonical_form(vector<int> sequence) -> vector<int>
    {
        if (sequence.size() < 3)
            return sequence;
        std::rotate(sequence.begin(), std::min_element(sequence.begin(), sequence.end()), sequence.end());
        if (sequence[1] > sequence.back())
            std::reverse(sequence.begin() + 1, sequence.end());
        return sequence;
    }

    auto Cycle::from_sequence(const Graph & g, vector<int> sequence) -> Cycle
    {
        if (! is_cycle_of(g, sequence)) {
            string text;
            for (int v : sequence)
                text += (text.empty() ? "" : " ") + to_string(v);
            throw std::invalid_argument("not a cycle of the graph: [" + text + "]");
        }
        return Cycle{canonical_form(std::move(sequence))};
    }

    auto Cycle::vertex_set() const noexcept -> VertexSet
    {
        return VertexSet::from(_sequence);
    }

    auto is_cycle_of(const Graph & g, span<const int> sequence) -> bool
    {
        if (sequence.size() < 3)
            return false;
        VertexSet seen;
        for (std::size_t i = 0; i < sequence.size(); ++i) {
            int v = sequence[i];
            if (v < 0 || v >= g.order() || seen.contains(v))
                return false;
            seen.insert(v);
            int next = sequence[(i + 1) % sequence.size()];
            if (next < 0 || next >= g.order() || ! g.adjacent(v, next))
                return false;
        }
        return true;
    }

    namespace
    {
        auto is_forest(const Graph & g) -> bool
        {
            return g.size() == g.order() - count_components_within(g, g.vertices());
        }

        /// Hamiltonian paths of g[S] from min(S), tabulated by their end vertices; S over all subsets.
        auto longest_cycle_dp(const Graph & g) -> optional<Cycle>
        {
            int n = g.order();
            auto rows = g.rows();
            vector<std::uint32_t> ends(std::size_t{1} << n, 0);
            for (int v = 0; v < n; ++v)
                ends[std::size_t{1} << v] = std::uint32_t{1} << v;

            std::uint64_t best_set = 0;
            int best_end = -1, best_size = 0;
            for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
                auto here = ends[bits];
                if (0 == here)
                    continue;
                VertexSet s{bits};
                int low = s.first();
                auto above_low = VertexSet{~((std::uint64_t{2} << low) - 1)};

                int size = s.size();
                if (size >= 3 && size > best_size) {
                    auto closing = VertexSet{here} & rows[low];
                    if (! closing.empty()) {
                        best_size = size;
                        best_set = bits;
                        best_end = closing.first();
                    }
                }

                for (int v : VertexSet{here})
                    for (int w : (rows[v] & above_low & g.vertices()) - s)
                        ends[bits | (std::uint64_t{1} << w)] |= std::uint32_t{1} << w;
            }

            if (best_end == -1)
                return std::nullopt;

            vector<int> path;
            std::uint64_t bits = best_set;
            int end = best_end;
            while (true) {
                path.push_back(end);
                bits &= ~(std::uint64_t{1} << end);
                if (0 == bits)
                    break;
                end = (VertexSet{ends[bits]} & rows[end]).first();
            }
            std::reverse(path.begin(), path.end());
            return Cycle::from_sequence(g, std::move(path));
        }

        /**
         * Depth-first enumeration of cycles of a fixed length whose smallest
         * vertex is `start`, extending in increasing vertex order.
         */
        class FixedLengthCycles
        {
        public:
            FixedLengthCycles(const Graph & g, int length, const function<bool(const Cycle &)> & f, const SearchLimits & limits) :
                _g(g), _length(length), _f(f), _budget(limits)
            {
            }

            auto run() -> bool
            {
                auto rows = _g.rows();
                for (int s = 0; s + _length <= _g.order(); ++s) {
                    _start = s;
                    _allowed = _g.vertices() - VertexSet::range(s + 1);
                    if ((rows[s] & _allowed).size() < 2)
                        continue;
                    if (component_of(_g, _allowed.with(s), s).size() < _length)
                        continue;
                    _path.assign(1, s);
                    if (! extend(VertexSet::single(s)))
                        return false;
                }
                return true;
            }

        private:
            auto extend(VertexSet visited) -> bool
            {
                _budget.tick();
                auto rows = _g.rows();
                int end = _path.back();
                int depth = static_cast<int>(_path.size());
                auto free = _allowed - visited;
                int remaining_after = _length - depth - 1;

                for (int w : rows[end] & free) {
                    int first = depth == 1 ? w : _path[1];
                    auto above_first = VertexSet{~((std::uint64_t{2} << first) - 1)};

                    if (remaining_after == 0) {
                        if (rows[w].contains(_start) && w > first) {
                            _path.push_back(w);
                            bool go_on = _f(Cycle::from_sequence(_g, _path));
                            _path.pop_back();
                            if (! go_on)
                                return false;
                        }
                        continue;
                    }

                    auto onward = free.without(w);
                    auto reach = component_of(_g, onward.with(w), w).without(w);
                    if (reach.size() < remaining_after)
                        continue;
                    if ((rows[_start] & reach & above_first).empty())
                        continue;

                    _path.push_back(w);
                    bool go_on = extend(visited.with(w));
                    _path.pop_back();
                    if (! go_on)
                        return false;
                }
                return true;
            }

            const Graph & _g;
            int _length;
            const function<bool(const Cycle &)> & _f;
            SearchBudget _budget;
            int _start = 0;
            VertexSet _allowed;
            vector<int> _path;
        };
    }

    auto find_hamiltonian_cycle_dp(const Graph & g) -> optional<Cycle>
    {
        int n = g.order();
        if (n > 24)
            throw ResourceLimitExceeded("hamiltonian dynamic programme limited to order 24, got " + to_string(n));
        if (n < 3)
            return std::nullopt;

        // subsets of {1..n-1}, vertex v at bit v-1; entries are end-vertex sets in graph numbering
        auto rows = g.rows();
        std::size_t states = std::size_t{1} << (n - 1);
        vector<std::uint32_t> ends(states, 0);
        for (int v : rows[0])
            ends[std::size_t{1} << (v - 1)] = std::uint32_t{1} << v;

        for (std::size_t mask = 1; mask < states; ++mask) {
            auto here = ends[mask];
            if (0 == here)
                continue;
            VertexSet used{std::uint64_t{mask} << 1};
            for (int v : VertexSet{here})
                for (int w : rows[v] - used - VertexSet::single(0))
                    ends[mask | (std::size_t{1} << (w - 1))] |= std::uint32_t{1} << w;
        }

        std::size_t full = states - 1;
        auto closing = VertexSet{ends[full]} & rows[0];
        if (closing.empty())
            return std::nullopt;

        vector<int> path;
        std::size_t mask = full;
        int end = closing.first();
        while (true) {
            path.push_back(end);
            mask &= ~(std::size_t{1} << (end - 1));
            if (0 == mask)
                break;
            end = (VertexSet{ends[mask]} & rows[end]).first();
        }
        path.push_back(0);
        std::reverse(path.begin(), path.end());
        return Cycle::from_sequence(g, std::move(path));
    }

    auto find_hamiltonian_cycle_backtracking(const Graph & g, const SearchLimits & limits) -> optional<Cycle>
    {
        int n = g.order();
        if (n < 3 || ! is_connected(g) || min_degree_within(g, g.vertices()) < 2)
            return std::nullopt;

        auto rows = g.rows();
        SearchBudget budget(limits);
        vector<int> path{0};
        auto all = g.vertices();

        auto extend = [&](auto & self, VertexSet visited) -> bool {
            budget.tick();
            int end = path.back();
            if (static_cast<int>(path.size()) == n)
                return rows[end].contains(0);

            auto unvisited = all - visited;
            if (! rows[0].intersects(unvisited))
                return false;
            // each unvisited vertex still needs two usable neighbours
            auto usable = unvisited.with(end).with(0);
            for (int w : unvisited)
                if ((rows[w] & usable).size() < 2)
                    return false;
            if (! unvisited.subset_of(component_of(g, unvisited.with(end), end)))
                return false;

            // fewest onward options first
            auto options = rows[end] & unvisited;
            vector<std::pair<int, int>> order;
            for (int w : options)
                order.emplace_back((rows[w] & unvisited).size(), w);
            std::sort(order.begin(), order.end());

            for (auto [ignored, w] : order) {
                path.push_back(w);
                if (self(self, visited.with(w)))
                    return true;
                path.pop_back();
            }
            return false;
        };

        if (extend(extend, VertexSet::single(0)))
            return Cycle::from_sequence(g, path);
        return std::nullopt;
    }

    auto find_hamiltonian_cycle(const Graph & g, const CycleSearchOptions & options) -> optional<Cycle>
    {
        if (g.order() <= options.max_order_hamiltonian_dp && g.order() <= 24)
            return find_hamiltonian_cycle_dp(g);
        if (g.order() > options.max_order_backtracking)
            throw ResourceLimitExceeded("hamiltonian search limited to order " + to_string(options.max_order_backtracking));
        return find_hamiltonian_cycle_backtracking(g, options.limits);
    }

    auto for_each_cycle_of_length(const Graph & g, int length, const function<bool(const Cycle &)> & f, const SearchLimits & limits) -> bool
    {
        if (length < 3 || length > g.order())
            return true;
        return FixedLengthCycles(g, length, f, limits).run();
    }

    auto find_longest_cycle(const Graph & g, const CycleSearchOptions & options) -> optional<Cycle>
    {
        if (is_forest(g))
            return std::nullopt;
        if (g.order() <= options.max_order_longest_dp && g.order() <= 24)
            return longest_cycle_dp(g);
        if (g.order() > options.max_order_backtracking)
            throw ResourceLimitExceeded("longest cycle search limited to order " + to_string(options.max_order_backtracking));

        optional<Cycle> found;
        for (int length = g.order(); length >= 3 && ! found; --length)
            for_each_cycle_of_length(g, length, [&](const Cycle & c) {
                found = c;
                return false;
            }, options.limits);
        return found;
    }

    auto circumference(const Graph & g, const CycleSearchOptions & options) -> int
    {
        auto c = find_longest_cycle(g, options);
        return c ? c->length() : 0;
    }

    auto enumerate_longest_cycles(const Graph & g, std::size_t cap, const CycleSearchOptions & options) -> LongestCycles
    {
        LongestCycles result;
        result.length = circumference(g, options);
        if (0 == result.length)
            return result;
        for_each_cycle_of_length(g, result.length, [&](const Cycle & c) {
            if (result.cycles.size() >= cap) {
                result.truncated = true;
                return false;
            }
            result.cycles.push_back(c);
            return true;
        }, options.limits);
        return result;
    }

    auto is_edge_dominating(const Graph & g, const Cycle & c) -> EdgeDomination
    {
        if (! is_cycle_of(g, c.vertices()))
            throw std::invalid_argument("cycle does not belong to the graph");
        EdgeDomination result;
        for (auto component : components_within(g, g.vertices() - c.vertex_set()))
            if (component.size() >= 2) {
                result.dominating = false;
                result.component = component;
                break;
            }
        return result;
    }

    auto find_non_dominating_longest_cycle(const Graph & g, const CycleSearchOptions & options) -> optional<Cycle>
    {
        if (find_hamiltonian_cycle(g, options))
            return std::nullopt;
        int length = circumference(g, options);
        if (0 == length)
            return std::nullopt;

        // nothing to find unless some edge avoids a set of `length` vertices
        optional<Cycle> found;
        for_each_cycle_of_length(g, length, [&](const Cycle & c) {
            if (! is_edge_dominating(g, c).dominating) {
                found = c;
                return false;
            }
            return true;
        }, options.limits);
        return found;
    }
}
