#ifndef ZF_GUARD_VERTEX_SET_HH
#define ZF_GUARD_VERTEX_SET_HH 1

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace zf
{
    /// Maximum number of vertices any graph may have.
    inline constexpr int max_vertices = 128;

    /**
     * Fixed-width bitset over dense vertex ids 0..127.
     *
     * A VertexSet does not know its universe; callers that need a complement
     * intersect with Graph::vertices(). Iteration visits members in
     * increasing id order.
     */
    class VertexSet
    {
        public:
            static constexpr int words = max_vertices / 64;

            constexpr VertexSet() = default;

            VertexSet(std::initializer_list<int> ids)
            {
                for (int v : ids)
                    set(v);
            }

            /// The set {0, ..., n-1}.
            static auto prefix(int n) -> VertexSet
            {
                VertexSet result;
                for (int w = 0 ; w < words ; ++w) {
                    int lo = w * 64;
                    if (n >= lo + 64)
                        result._bits[w] = ~std::uint64_t{0};
                    else if (n > lo)
                        result._bits[w] = (std::uint64_t{1} << (n - lo)) - 1;
                }
                return result;
            }

            static auto from_ids(const std::vector<int> & ids) -> VertexSet
            {
                VertexSet result;
                for (int v : ids)
                    result.set(v);
                return result;
            }

            constexpr auto test(int v) const -> bool
            {
                return (_bits[v >> 6] >> (v & 63)) & 1u;
            }

            constexpr auto set(int v) -> void
            {
                _bits[v >> 6] |= std::uint64_t{1} << (v & 63);
            }

            constexpr auto reset(int v) -> void
            {
                _bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            }

            constexpr auto count() const -> int
            {
                int result = 0;
                for (auto w : _bits)
                    result += std::popcount(w);
                return result;
            }

            constexpr auto empty() const -> bool
            {
                for (auto w : _bits)
                    if (w)
                        return false;
                return true;
            }

            /// Smallest member, or -1 when empty.
            constexpr auto first() const -> int
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w])
                        return w * 64 + std::countr_zero(_bits[w]);
                return -1;
            }

            /// Largest member, or -1 when empty.
            constexpr auto last() const -> int
            {
                for (int w = words - 1 ; w >= 0 ; --w)
                    if (_bits[w])
                        return w * 64 + 63 - std::countl_zero(_bits[w]);
                return -1;
            }

            /// True when exactly one bit is set; cheaper than count() == 1.
            constexpr auto singleton() const -> bool
            {
                int seen = 0;
                for (auto w : _bits) {
                    if (! w)
                        continue;
                    if (w & (w - 1))
                        return false;
                    if (++seen > 1)
                        return false;
                }
                return seen == 1;
            }

            constexpr auto subset_of(const VertexSet & other) const -> bool
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w] & ~other._bits[w])
                        return false;
                return true;
            }

            constexpr auto intersects(const VertexSet & other) const -> bool
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w] & other._bits[w])
                        return true;
                return false;
            }

            constexpr auto operator&= (const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < words ; ++w)
                    _bits[w] &= o._bits[w];
                return *this;
            }

            constexpr auto operator|= (const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < words ; ++w)
                    _bits[w] |= o._bits[w];
                return *this;
            }

            /// Set difference.
            constexpr auto operator-= (const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < words ; ++w)
                    _bits[w] &= ~o._bits[w];
                return *this;
            }

            friend constexpr auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend constexpr auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend constexpr auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            friend constexpr auto operator== (const VertexSet &, const VertexSet &) -> bool = default;

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                for (int v : *this)
                    result.push_back(v);
                return result;
            }

            auto raw() const -> const std::array<std::uint64_t, words> & { return _bits; }

            class const_iterator
            {
                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = int;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const int *;
                    using reference = int;

                    const_iterator() = default;

                    auto operator* () const -> int { return _word * 64 + std::countr_zero(_rest); }

                    auto operator++ () -> const_iterator &
                    {
                        _rest &= _rest - 1;
                        skip_empty();
                        return *this;
                    }

                    auto operator++ (int) -> const_iterator
                    {
                        auto old = *this;
                        ++*this;
                        return old;
                    }

                    friend auto operator== (const const_iterator & a, const const_iterator & b) -> bool
                    {
                        return a._word == b._word && a._rest == b._rest;
                    }

                private:
                    friend class VertexSet;

                    const_iterator(const VertexSet * s, int word) :
                        _set(s), _word(word), _rest(word < words ? s->_bits[word] : 0)
                    {
                        skip_empty();
                    }

                    auto skip_empty() -> void
                    {
                        while (_rest == 0 && _word < words) {
                            ++_word;
                            _rest = _word < words ? _set->_bits[_word] : 0;
                        }
                    }

                    const VertexSet * _set = nullptr;
                    int _word = words;
                    std::uint64_t _rest = 0;
            };

            auto begin() const -> const_iterator { return const_iterator(this, 0); }
            auto end() const -> const_iterator { return const_iterator(this, words); }

        private:
            std::array<std::uint64_t, words> _bits{};
    };

    /**
     * Lexicographic order on the sorted member lists, so {0,1} < {0,2} < {1,2}.
     * This is the tie-breaking order for every witness the solver reports.
     */
    auto lex_less(const VertexSet & a, const VertexSet & b) -> bool;

    /// Renders as "{0,3,5}".
    auto to_string(const VertexSet & s) -> std::string;
}

#endif
