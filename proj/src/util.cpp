#include "planar/util.hpp"

#include <algorithm>
#include <cstdlib>

namespace planar {

int thread_count() {
    if (const char* env = std::getenv("PLANARCYCLES_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& f) {
    int nt = std::min<std::size_t>(thread_count(), std::max<std::size_t>(total, 1));
    if (nt <= 1 || total <= 1) {
        f(0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (total + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] { f(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 15];
    return out;
}

}  // namespace planar
