#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kfam {

/// Largest supported ground-set size. Two machine words cover every
/// desk-scale experiment and keep all set algebra branch-free.
inline constexpr int kMaxVertices = 128;

/// A subset of the ground set [n] = {1,...,n}, stored as a 128-bit mask.
/// Vertices are 1-based in the public API.
class VertexSet {
public:
    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    /// The full set {1,...,n}.
    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; w < kWords; ++w) {
            const int lo = 64 * w;
            if (n <= lo) break;
            const int bits = (n - lo >= 64) ? 64 : n - lo;
            s.words_[w] = (bits == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << bits) - 1);
        }
        return s;
    }

    static VertexSet from_vertices(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    bool contains(int v) const {
        return (words_[word(v)] >> bit(v)) & 1u;
    }

    void insert(int v) { words_[word(v)] |= mask(v); }
    void erase(int v) { words_[word(v)] &= ~mask(v); }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.insert(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.erase(v);
        return s;
    }

    int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    bool empty() const { return words_[0] == 0 && words_[1] == 0; }

    /// Least vertex, or 0 when empty.
    int min_vertex() const {
        if (words_[0] != 0) return std::countr_zero(words_[0]) + 1;
        if (words_[1] != 0) return std::countr_zero(words_[1]) + 65;
        return 0;
    }

    /// Greatest vertex, or 0 when empty.
    int max_vertex() const {
        if (words_[1] != 0) return 128 - std::countl_zero(words_[1]);
        if (words_[0] != 0) return 64 - std::countl_zero(words_[0]);
        return 0;
    }

    bool subset_of(const VertexSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    bool disjoint_with(const VertexSet& o) const {
        return (words_[0] & o.words_[0]) == 0 && (words_[1] & o.words_[1]) == 0;
    }

    /// True iff some element is >= v.
    bool any_geq(int v) const {
        return !(*this & geq_mask(v)).empty();
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        a.words_[0] |= b.words_[0];
        a.words_[1] |= b.words_[1];
        return a;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        a.words_[0] &= b.words_[0];
        a.words_[1] &= b.words_[1];
        return a;
    }

    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        a.words_[0] &= ~b.words_[0];
        a.words_[1] &= ~b.words_[1];
        return a;
    }

    friend VertexSet operator^(VertexSet a, const VertexSet& b) {
        a.words_[0] ^= b.words_[0];
        a.words_[1] ^= b.words_[1];
        return a;
    }

    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    bool operator==(const VertexSet& o) const = default;

    /// Ascending 1-based vertex list.
    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                out.push_back(64 * w + std::countr_zero(bits) + 1);
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each_vertex(Fn&& fn) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                fn(64 * w + std::countr_zero(bits) + 1);
                bits &= bits - 1;
            }
        }
    }

    /// "{1,2,5}" style rendering for diagnostics.
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each_vertex([&](int v) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        });
        out += '}';
        return out;
    }

    std::uint64_t word0() const { return words_[0]; }
    std::uint64_t word1() const { return words_[1]; }

private:
    static constexpr int kWords = 2;

    static int word(int v) { return (v - 1) >> 6; }
    static int bit(int v) { return (v - 1) & 63; }
    static std::uint64_t mask(int v) { return std::uint64_t{1} << bit(v); }

    static VertexSet geq_mask(int v) {
        return full(kMaxVertices) - full(v - 1);
    }

    std::array<std::uint64_t, kWords> words_{0, 0};
};

/// Canonical total order: lexicographic over the ascending vertex list.
/// A set whose list is a proper prefix of another's sorts first.
inline int compare_canonical(const VertexSet& a, const VertexSet& b) {
    const VertexSet sym = a ^ b;
    if (sym.empty()) return 0;
    const int m = sym.min_vertex();
    if (a.contains(m)) return b.any_geq(m) ? -1 : 1;
    return a.any_geq(m) ? 1 : -1;
}

inline bool operator<(const VertexSet& a, const VertexSet& b) {
    return compare_canonical(a, b) < 0;
}

inline bool operator>(const VertexSet& a, const VertexSet& b) { return b < a; }
inline bool operator<=(const VertexSet& a, const VertexSet& b) { return !(b < a); }
inline bool operator>=(const VertexSet& a, const VertexSet& b) { return !(a < b); }

}  // namespace kfam
