#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sflab {

/// Dynamic-width bitset used both as an element mask (mirror of a member)
/// and as a member-index mask (subfamily selector).
///
/// Two bitsets are only combined when they have the same width; every
/// binary operation assumes it.
class Bitset
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    Bitset() = default;
    explicit Bitset(std::size_t width)
        : _width(width), _words((width + bits_per_word - 1) / bits_per_word, 0)
    {
    }

    static Bitset full(std::size_t width)
    {
        Bitset b(width);
        for (std::size_t i = 0; i < width; ++i)
            b.set(i);
        return b;
    }

    std::size_t width() const { return _width; }

    void set(std::size_t i) { _words[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
    void reset(std::size_t i) { _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
    bool test(std::size_t i) const { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : _words)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (Word w : _words)
            if (w != 0)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    bool intersects(const Bitset& other) const
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= o._words[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= o._words[i];
        return *this;
    }
    /// this \ o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~o._words[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    /// Lowest set bit index, or width() when empty.
    std::size_t first() const
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i])
                return i * bits_per_word + static_cast<std::size_t>(std::countr_zero(_words[i]));
        return _width;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            Word w = _words[i];
            while (w) {
                f(i * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const
    {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    std::size_t hash() const
    {
        std::size_t h = _width * 0x9e3779b97f4a7c15ULL;
        for (Word w : _words)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    const std::vector<Word>& words() const { return _words; }

private:
    std::size_t _width = 0;
    std::vector<Word> _words;
};

struct BitsetHash
{
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace sflab
