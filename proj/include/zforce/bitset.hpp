#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <compare>

namespace zforce {

using BitWord = std::uint64_t;
inline constexpr unsigned bits_per_word = 64;

/// Fixed-capacity bitset over Words machine words. Only the operations the
/// forcing and search kernels need.
template <unsigned Words>
class FixedBitSet
{
public:
    static constexpr unsigned capacity = Words * bits_per_word;

    constexpr FixedBitSet() = default;

    /// Bits 0..n-1 set.
    static constexpr auto first_n(unsigned n) -> FixedBitSet
    {
        FixedBitSet r;
        for (unsigned w = 0; w < Words; ++w) {
            unsigned lo = w * bits_per_word;
            if (n >= lo + bits_per_word)
                r.words_[w] = ~BitWord{0};
            else if (n > lo)
                r.words_[w] = (BitWord{1} << (n - lo)) - 1;
        }
        return r;
    }

    static constexpr auto single(unsigned v) -> FixedBitSet
    {
        FixedBitSet r;
        r.set(v);
        return r;
    }

    constexpr void set(unsigned v) { words_[v / bits_per_word] |= BitWord{1} << (v % bits_per_word); }
    constexpr void reset(unsigned v) { words_[v / bits_per_word] &= ~(BitWord{1} << (v % bits_per_word)); }

    [[nodiscard]] constexpr auto test(unsigned v) const -> bool
    {
        return (words_[v / bits_per_word] >> (v % bits_per_word)) & 1U;
    }

    [[nodiscard]] constexpr auto count() const -> unsigned
    {
        unsigned c = 0;
        for (auto w : words_)
            c += static_cast<unsigned>(std::popcount(w));
        return c;
    }

    [[nodiscard]] constexpr auto none() const -> bool
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    [[nodiscard]] constexpr auto any() const -> bool { return ! none(); }

    /// Exactly one bit set.
    [[nodiscard]] constexpr auto singleton() const -> bool
    {
        unsigned seen = 0;
        for (auto w : words_) {
            if (w == 0)
                continue;
            if ((w & (w - 1)) != 0 || ++seen > 1)
                return false;
        }
        return seen == 1;
    }

    /// Index of the lowest set bit, or capacity if empty.
    [[nodiscard]] constexpr auto first() const -> unsigned
    {
        for (unsigned w = 0; w < Words; ++w)
            if (words_[w] != 0)
                return w * bits_per_word + static_cast<unsigned>(std::countr_zero(words_[w]));
        return capacity;
    }

    /// Index of the next set bit strictly after v, or capacity.
    [[nodiscard]] constexpr auto next(unsigned v) const -> unsigned
    {
        ++v;
        if (v >= capacity)
            return capacity;
        unsigned w = v / bits_per_word;
        BitWord masked = words_[w] & (~BitWord{0} << (v % bits_per_word));
        if (masked != 0)
            return w * bits_per_word + static_cast<unsigned>(std::countr_zero(masked));
        for (++w; w < Words; ++w)
            if (words_[w] != 0)
                return w * bits_per_word + static_cast<unsigned>(std::countr_zero(words_[w]));
        return capacity;
    }

    template <typename F>
    constexpr void for_each(F && f) const
    {
        for (unsigned w = 0; w < Words; ++w) {
            BitWord bits = words_[w];
            while (bits != 0) {
                f(w * bits_per_word + static_cast<unsigned>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] constexpr auto is_subset_of(const FixedBitSet & o) const -> bool
    {
        for (unsigned w = 0; w < Words; ++w)
            if ((words_[w] & ~o.words_[w]) != 0)
                return false;
        return true;
    }

    [[nodiscard]] constexpr auto intersects(const FixedBitSet & o) const -> bool
    {
        for (unsigned w = 0; w < Words; ++w)
            if ((words_[w] & o.words_[w]) != 0)
                return true;
        return false;
    }

    constexpr auto operator&=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }

    constexpr auto operator|=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }

    constexpr auto operator^=(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    /// this &= ~o
    constexpr auto subtract(const FixedBitSet & o) -> FixedBitSet &
    {
        for (unsigned w = 0; w < Words; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend constexpr auto operator&(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a &= b; }
    friend constexpr auto operator|(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a |= b; }
    friend constexpr auto operator^(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a ^= b; }
    friend constexpr auto operator-(FixedBitSet a, const FixedBitSet & b) -> FixedBitSet { return a.subtract(b); }

    friend constexpr auto operator==(const FixedBitSet &, const FixedBitSet &) -> bool = default;

    [[nodiscard]] constexpr auto word(unsigned w) const -> BitWord { return words_[w]; }
    constexpr void set_word(unsigned w, BitWord value) { words_[w] = value; }

private:
    std::array<BitWord, Words> words_{};
};

} // namespace zforce
