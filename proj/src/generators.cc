/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/generators.hh>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

using std::function;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace hamtough
{
    auto complete_graph(int n) -> Graph
    {
        GraphBuilder builder(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                builder.add_edge(u, v);
        return builder.build();
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("a cycle needs at least 3 vertices, got " + to_string(n));
        GraphBuilder builder(n);
        for (int v = 0; v < n; ++v)
            builder.add_edge(v, (v + 1) % n);
        return builder.build();
    }

    auto path_graph(int n) -> Graph
    {
        GraphBuilder builder(n);
        for (int v = 0; v + 1 < n; ++v)
            builder.add_edge(v, v + 1);
        return builder.build();
    }

    auto star_graph(int n) -> Graph
    {
        GraphBuilder builder(n);
        for (int v = 1; v < n; ++v)
            builder.add_edge(0, v);
        return builder.build();
    }

    auto complete_multipartite(const vector<int> & part_sizes) -> Graph
    {
        vector<int> part;
        for (std::size_t p = 0; p < part_sizes.size(); ++p) {
            if (part_sizes[p] < 0)
                throw std::invalid_argument("part sizes must be nonnegative");
            part.insert(part.end(), part_sizes[p], static_cast<int>(p));
        }
        int n = static_cast<int>(part.size());
        if (n > Graph::max_order)
            throw std::invalid_argument("complete multipartite graph has more than " + to_string(Graph::max_order) + " vertices");
        GraphBuilder builder(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part[u] != part[v])
                    builder.add_edge(u, v);
        return builder.build();
    }

    auto random_graph(int n, const Rational & p, uint64_t seed) -> Graph
    {
        if (p < Rational(0) || p > Rational(1))
            throw std::invalid_argument("edge probability must lie in [0, 1], got " + p.to_string());

        std::mt19937_64 rng(seed);
        auto den = static_cast<uint64_t>(p.den());
        auto num = static_cast<uint64_t>(p.num());
        // largest multiple of den that fits, so residues are exactly uniform
        uint64_t limit = den == 1 ? 0 : ~uint64_t{0} - (~uint64_t{0} % den + 1) % den;

        GraphBuilder builder(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                uint64_t word = rng();
                while (den != 1 && limit != ~uint64_t{0} && word > limit)
                    word = rng();
                if (word % den < num)
                    builder.add_edge(u, v);
            }
        return builder.build();
    }

    auto LabeledGraphFilter::accepts(const Graph & g) const -> bool
    {
        if (min_degree > 0 && g.order() > 0 && min_degree_within(g, g.vertices()) < min_degree)
            return false;
        if (connected && ! is_connected(g))
            return false;
        return true;
    }

    LabeledGraphs::LabeledGraphs(int n, int max_order) :
        _n(n)
    {
        if (n < 0 || n > max_order || n > 11)
            throw std::invalid_argument("exhaustive enumeration is limited to order " + to_string(std::min(max_order, 11)) + ", got " + to_string(n));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                _pairs.push_back(Edge{a, b});
    }

    auto LabeledGraphs::at(uint64_t index) const -> Graph
    {
        vector<VertexSet> rows(_n);
        for (std::size_t b = 0; b < _pairs.size(); ++b)
            if ((index >> b) & 1) {
                rows[_pairs[b].u].insert(_pairs[b].v);
                rows[_pairs[b].v].insert(_pairs[b].u);
            }
        return Graph::from_rows(std::move(rows));
    }

    auto LabeledGraphs::for_each(const LabeledGraphFilter & filter, const function<bool(const Graph &)> & f) const -> void
    {
        for (uint64_t i = 0; i < count(); ++i) {
            auto g = at(i);
            if (filter.accepts(g) && ! f(g))
                return;
        }
    }

    auto LabeledGraphs::parallel_for_each(const LabeledGraphFilter & filter, unsigned workers,
        const function<void(const Graph &, uint64_t)> & f) const -> void
    {
        parallel_for(count(), workers, [&](uint64_t i) {
            auto g = at(i);
            if (filter.accepts(g))
                f(g, i);
        });
    }

    auto parallel_for(uint64_t count, unsigned workers, const function<void(uint64_t)> & f) -> void
    {
        if (0 == workers)
            workers = std::max(1u, std::thread::hardware_concurrency());
        constexpr uint64_t chunk = 256;

        std::atomic<uint64_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto work = [&] {
            while (! failed.load(std::memory_order_relaxed)) {
                uint64_t start = next.fetch_add(chunk);
                if (start >= count)
                    return;
                try {
                    for (uint64_t i = start; i < std::min(count, start + chunk); ++i)
                        f(i);
                }
                catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        if (workers == 1)
            work();
        else {
            vector<std::jthread> threads;
            for (unsigned t = 0; t < workers; ++t)
                threads.emplace_back(work);
        }
        if (error)
            std::rethrow_exception(error);
    }
}
