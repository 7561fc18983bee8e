#ifndef LHREG_BITSET_HPP
#define LHREG_BITSET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lhreg {

/**
 * Fixed-width set of small non-negative integers packed into 64-bit words.
 *
 * Used both for variable supports (indices into an alphabet) and for
 * vertex sets of a labeled hypergraph. All set algebra is word-parallel.
 */
template <std::size_t Words>
class BitSet {
public:
    static constexpr std::size_t capacity = Words * 64;

    constexpr BitSet() = default;

    static BitSet from_indices(const std::vector<std::size_t>& idx) {
        BitSet s;
        for (auto i : idx) s.set(i);
        return s;
    }

    /// Set {0, 1, ..., n-1}.
    static BitSet prefix(std::size_t n) {
        if (n > capacity) throw std::out_of_range("BitSet::prefix exceeds capacity");
        BitSet s;
        for (std::size_t w = 0; w < Words && n > 0; ++w) {
            if (n >= 64) {
                s.words_[w] = ~std::uint64_t{0};
                n -= 64;
            } else {
                s.words_[w] = (std::uint64_t{1} << n) - 1;
                n = 0;
            }
        }
        return s;
    }

    void set(std::size_t i) {
        check(i);
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void reset(std::size_t i) {
        check(i);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    [[nodiscard]] bool test(std::size_t i) const {
        if (i >= capacity) return false;
        return (words_[i / 64] >> (i % 64)) & 1U;
    }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    [[nodiscard]] bool subset_of(const BitSet& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if ((words_[w] & ~o.words_[w]) != 0) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const BitSet& o) const {
        for (std::size_t w = 0; w < Words; ++w)
            if ((words_[w] & o.words_[w]) != 0) return true;
        return false;
    }

    /// Smallest member; capacity when empty.
    [[nodiscard]] std::size_t lowest() const {
        for (std::size_t w = 0; w < Words; ++w)
            if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return capacity;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < Words; ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    BitSet& operator|=(const BitSet& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    BitSet& operator&=(const BitSet& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    BitSet& operator-=(const BitSet& o) {
        for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    friend bool operator==(const BitSet&, const BitSet&) = default;

    /// Total order on raw words; cheap key for ordered containers. Not the
    /// canonical monomial order (see lex_less).
    friend bool operator<(const BitSet& a, const BitSet& b) {
        for (std::size_t w = Words; w-- > 0;)
            if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
        return false;
    }

    [[nodiscard]] const std::array<std::uint64_t, Words>& words() const { return words_; }

private:
    static void check(std::size_t i) {
        if (i >= capacity) throw std::out_of_range("BitSet index exceeds capacity");
    }

    std::array<std::uint64_t, Words> words_{};
};

/// Lexicographic comparison of the sorted member lists of a and b.
template <std::size_t W>
bool lex_less(const BitSet<W>& a, const BitSet<W>& b) {
    if (a == b) return false;
    const auto d = ((a - b) | (b - a)).lowest();
    // Both agree below d. The set holding d has the smaller element at the
    // first differing position, unless the other set has run out.
    if (a.test(d)) {
        auto rest = b;
        for (std::size_t i = 0; i <= d; ++i) rest.reset(i);
        return !rest.empty();
    }
    auto rest = a;
    for (std::size_t i = 0; i <= d; ++i) rest.reset(i);
    return rest.empty();
}

/// Degree first, then lexicographic by support.
template <std::size_t W>
bool graded_lex_less(const BitSet<W>& a, const BitSet<W>& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

struct BitSetHash {
    template <std::size_t W>
    std::size_t operator()(const BitSet<W>& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : s.words()) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Variable supports; capacity 128 variables.
using VarSet = BitSet<2>;
/// Vertex sets of a labeled hypergraph; capacity 64 vertices.
using VertexSet = BitSet<1>;

}  // namespace lhreg

#endif  // LHREG_BITSET_HPP
