#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace planar {

// Vertex set over labels 0..63, one machine word. All census inner loops
// reduce to AND/popcount on these.
struct Bits64 {
    std::uint64_t w = 0;

    static Bits64 single(int v) { return Bits64{std::uint64_t{1} << v}; }
    // all vertices 0..n-1
    static Bits64 full(int n) {
        return Bits64{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    // all vertices strictly greater than v (within 0..63)
    static Bits64 above(int v) {
        return v >= 63 ? Bits64{} : Bits64{~std::uint64_t{0} << (v + 1)};
    }

    bool test(int v) const { return (w >> v) & 1; }
    void set(int v) { w |= std::uint64_t{1} << v; }
    void reset(int v) { w &= ~(std::uint64_t{1} << v); }
    int count() const { return std::popcount(w); }
    bool any() const { return w != 0; }
    bool none() const { return w == 0; }
    bool subset_of(Bits64 o) const { return (w & ~o.w) == 0; }
    int lowest() const { return std::countr_zero(w); }  // requires any()

    friend Bits64 operator&(Bits64 a, Bits64 b) { return Bits64{a.w & b.w}; }
    friend Bits64 operator|(Bits64 a, Bits64 b) { return Bits64{a.w | b.w}; }
    friend Bits64 operator^(Bits64 a, Bits64 b) { return Bits64{a.w ^ b.w}; }
    Bits64 operator~() const { return Bits64{~w}; }
    Bits64& operator&=(Bits64 o) { w &= o.w; return *this; }
    Bits64& operator|=(Bits64 o) { w |= o.w; return *this; }
    friend bool operator==(Bits64 a, Bits64 b) { return a.w == b.w; }

    Bits64 minus(Bits64 o) const { return Bits64{w & ~o.w}; }

    template <class F>
    void for_each(F f) const {
        std::uint64_t x = w;
        while (x) {
            f(std::countr_zero(x));
            x &= x - 1;
        }
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }
};

// Multi-word variant; only used where n may exceed 64 (constructor outputs).
struct WideBits {
    std::vector<std::uint64_t> w;

    explicit WideBits(int nwords = 0) : w(nwords, 0) {}

    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    friend bool operator==(const WideBits& a, const WideBits& b) { return a.w == b.w; }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(int(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

}  // namespace planar
