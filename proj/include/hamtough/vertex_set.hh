/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_VERTEX_SET_HH
#define HAMTOUGH_GUARD_VERTEX_SET_HH 1

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hamtough
{
    /**
     * A set of vertices drawn from 0..63, packed into a single word. Every
     * graph in this library has at most 64 vertices, so one word is one
     * adjacency row.
     */
    class VertexSet
    {
    public:
        class Iterator
        {
        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = int;
            using difference_type = std::ptrdiff_t;
            using pointer = const int *;
            using reference = int;

            constexpr Iterator() noexcept = default;
            constexpr explicit Iterator(std::uint64_t rest) noexcept : _rest(rest) {}

            constexpr auto operator*() const noexcept -> int { return std::countr_zero(_rest); }

            constexpr auto operator++() noexcept -> Iterator &
            {
                _rest &= _rest - 1;
                return *this;
            }

            constexpr auto operator++(int) noexcept -> Iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }

            constexpr auto operator==(const Iterator &) const noexcept -> bool = default;

        private:
            std::uint64_t _rest = 0;
        };

        constexpr VertexSet() noexcept = default;
        constexpr explicit VertexSet(std::uint64_t bits) noexcept : _bits(bits) {}

        /// {0, ..., n-1}
        static constexpr auto range(int n) noexcept -> VertexSet
        {
            return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        }

        static constexpr auto single(int v) noexcept -> VertexSet { return VertexSet{bit(v)}; }

        static constexpr auto of(std::initializer_list<int> vertices) noexcept -> VertexSet
        {
            VertexSet result;
            for (int v : vertices)
                result._bits |= bit(v);
            return result;
        }

        template <typename Range_>
        static auto from(const Range_ & vertices) -> VertexSet
        {
            VertexSet result;
            for (int v : vertices)
                result._bits |= bit(v);
            return result;
        }

        constexpr auto bits() const noexcept -> std::uint64_t { return _bits; }
        constexpr auto contains(int v) const noexcept -> bool { return (_bits >> v) & 1; }
        constexpr auto size() const noexcept -> int { return std::popcount(_bits); }
        constexpr auto empty() const noexcept -> bool { return _bits == 0; }

        /// Smallest member, or -1 when empty.
        constexpr auto first() const noexcept -> int { return _bits ? std::countr_zero(_bits) : -1; }

        /// Largest member, or -1 when empty.
        constexpr auto last() const noexcept -> int { return _bits ? 63 - std::countl_zero(_bits) : -1; }

        constexpr auto with(int v) const noexcept -> VertexSet { return VertexSet{_bits | bit(v)}; }
        constexpr auto without(int v) const noexcept -> VertexSet { return VertexSet{_bits & ~bit(v)}; }

        constexpr auto insert(int v) noexcept -> VertexSet &
        {
            _bits |= bit(v);
            return *this;
        }

        constexpr auto erase(int v) noexcept -> VertexSet &
        {
            _bits &= ~bit(v);
            return *this;
        }

        constexpr auto subset_of(VertexSet other) const noexcept -> bool { return (_bits & ~other._bits) == 0; }
        constexpr auto intersects(VertexSet other) const noexcept -> bool { return (_bits & other._bits) != 0; }

        constexpr auto operator|=(VertexSet other) noexcept -> VertexSet &
        {
            _bits |= other._bits;
            return *this;
        }

        constexpr auto operator&=(VertexSet other) noexcept -> VertexSet &
        {
            _bits &= other._bits;
            return *this;
        }

        constexpr auto operator-=(VertexSet other) noexcept -> VertexSet &
        {
            _bits &= ~other._bits;
            return *this;
        }

        friend constexpr auto operator|(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a._bits | b._bits}; }
        friend constexpr auto operator&(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a._bits & b._bits}; }
        friend constexpr auto operator-(VertexSet a, VertexSet b) noexcept -> VertexSet { return VertexSet{a._bits & ~b._bits}; }
        friend constexpr auto operator==(VertexSet, VertexSet) noexcept -> bool = default;

        constexpr auto begin() const noexcept -> Iterator { return Iterator{_bits}; }
        constexpr auto end() const noexcept -> Iterator { return Iterator{}; }

        auto to_vector() const -> std::vector<int> { return std::vector<int>(begin(), end()); }

    private:
        static constexpr auto bit(int v) noexcept -> std::uint64_t { return std::uint64_t{1} << v; }

        std::uint64_t _bits = 0;
    };

    /// Compares two sets as sorted vertex lists.
    inline auto lexicographically_less(VertexSet a, VertexSet b) noexcept -> bool
    {
        auto diff = a.bits() ^ b.bits();
        if (0 == diff)
            return false;
        int first_difference = std::countr_zero(diff);
        auto below = (std::uint64_t{1} << first_difference) - 1;
        // a proper prefix sorts first
        if (a.contains(first_difference))
            return (b.bits() & ~below) != 0;
        return (a.bits() & ~below) == 0;
    }
}

#endif
