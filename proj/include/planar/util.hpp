#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace planar {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic RNG helpers on top of a raw 64-bit stream; std distributions
// are implementation-defined, these are not.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() { return state = splitmix64(state); }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    double unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }
};

int thread_count();  // PLANARCYCLES_THREADS or hardware concurrency

// chunks [0,total) across threads; f(begin, end) must be thread-safe
void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& f);

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace planar
