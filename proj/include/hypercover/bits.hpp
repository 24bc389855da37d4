#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace hypercover {

// Fixed-capacity bitset sized for edge sets of 3-graphs on up to 16
// vertices: C(16,3) = 560 bits.
struct EdgeBits {
    static constexpr int kWords = 9;
    static constexpr int kMaxBits = kWords * 64;

    std::array<std::uint64_t, kWords> w{};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    int and_count(const EdgeBits& m) const {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(w[i] & m.w[i]);
        return c;
    }

    bool intersects(const EdgeBits& m) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & m.w[i]) return true;
        return false;
    }

    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    friend bool operator==(const EdgeBits&, const EdgeBits&) = default;

    friend bool operator<(const EdgeBits& a, const EdgeBits& b) {
        // colex order on edge sets: compare from the highest word down
        for (int i = kWords - 1; i >= 0; --i)
            if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
        return false;
    }

    // Visits the index of every set bit in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace hypercover
