#ifndef IRR_VERTEX_SET_HPP
#define IRR_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace irr
{
    /// Largest vertex count a Graph (and so a VertexSet) can hold.
    inline constexpr int max_order = 64;

    /**
     * A subset of the vertices 0..63, stored as one machine word.
     *
     * Ordering (operator<=>) is lexicographic on the ascending member lists,
     * so {0,3} < {1,2} and {0} < {0,1}. Every sorted list of sets and every
     * "least witness" in the library uses this order.
     */
    class VertexSet
    {
    public:
        using word = std::uint64_t;

        class iterator
        {
        public:
            using value_type = int;
            using difference_type = std::ptrdiff_t;
            using iterator_category = std::forward_iterator_tag;

            iterator() = default;
            explicit iterator(word rest) : _rest(rest) {}

            auto operator*() const -> int { return std::countr_zero(_rest); }
            auto operator++() -> iterator &
            {
                _rest &= _rest - 1;
                return *this;
            }
            auto operator++(int) -> iterator
            {
                auto old = *this;
                ++*this;
                return old;
            }
            auto operator==(const iterator &) const -> bool = default;

        private:
            word _rest = 0;
        };

        constexpr VertexSet() = default;
        constexpr explicit VertexSet(word bits) : _bits(bits) {}
        VertexSet(std::initializer_list<int> members)
        {
            for (int v : members)
                insert(v);
        }

        static auto from_bits(word bits) -> VertexSet { return VertexSet(bits); }
        static auto singleton(int v) -> VertexSet { return VertexSet(word{1} << v); }
        /// {0, ..., n-1}
        static auto first(int n) -> VertexSet
        {
            return VertexSet(n >= max_order ? ~word{0} : (word{1} << n) - 1);
        }

        auto bits() const -> word { return _bits; }
        auto empty() const -> bool { return _bits == 0; }
        auto size() const -> int { return std::popcount(_bits); }
        auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
        /// Smallest member; undefined on the empty set.
        auto front() const -> int { return std::countr_zero(_bits); }
        /// One past the largest member, 0 for the empty set.
        auto bound() const -> int { return max_order - std::countl_zero(_bits); }

        auto insert(int v) -> void { _bits |= word{1} << v; }
        auto erase(int v) -> void { _bits &= ~(word{1} << v); }

        auto with(int v) const -> VertexSet { return VertexSet(_bits | (word{1} << v)); }
        auto without(int v) const -> VertexSet { return VertexSet(_bits & ~(word{1} << v)); }

        auto begin() const -> iterator { return iterator{_bits}; }
        auto end() const -> iterator { return iterator{}; }

        auto members() const -> std::vector<int> { return {begin(), end()}; }
        /// "{0,2,5}"
        auto to_string() const -> std::string;

        friend auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits | b._bits); }
        friend auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & b._bits); }
        friend auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & ~b._bits); }
        friend auto operator^(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits ^ b._bits); }
        auto operator|=(VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
        auto operator&=(VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
        auto operator-=(VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

        auto subset_of(VertexSet o) const -> bool { return (_bits & ~o._bits) == 0; }
        auto intersects(VertexSet o) const -> bool { return (_bits & o._bits) != 0; }

        friend auto operator==(VertexSet a, VertexSet b) -> bool { return a._bits == b._bits; }

        friend auto operator<=>(VertexSet a, VertexSet b) -> std::strong_ordering
        {
            if (a._bits == b._bits)
                return std::strong_ordering::equal;
            // Both lists agree below the lowest differing vertex d. The set
            // holding d is smaller unless the other one has nothing past d.
            int d = std::countr_zero(a._bits ^ b._bits);
            auto beyond = [d](word w) { return d == max_order - 1 ? word{0} : w >> (d + 1); };
            if (a.contains(d))
                return beyond(b._bits) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
            return beyond(a._bits) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }

    private:
        word _bits = 0;
    };

    struct VertexSetHash
    {
        auto operator()(VertexSet s) const noexcept -> std::size_t { return std::hash<std::uint64_t>{}(s.bits()); }
    };
}

#endif
