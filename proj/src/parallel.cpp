#include "discordlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace discordlab {

int max_threads() {
    static const int cached = [] {
        if (const char* s = std::getenv("DISCORD_LAB_THREADS")) {
            const int v = std::atoi(s);
            if (v >= 1) return std::min(v, 256);
        }
        const unsigned hc = std::thread::hardware_concurrency();
        return hc > 0 ? static_cast<int>(hc) : 1;
    }();
    return cached;
}

std::pair<std::size_t, double> parallel_argmax(
    std::size_t n, const std::function<double(std::size_t)>& eval) {
    if (n == 0) return {0, -std::numeric_limits<double>::infinity()};
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n);

    auto scan = [&](std::size_t lo, std::size_t hi) {
        std::size_t best_i = lo;
        double best_v = eval(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double v = eval(i);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        return std::make_pair(best_i, best_v);
    };

    if (nthreads <= 1 || n < 64) return scan(0, n);

    std::vector<std::pair<std::size_t, double>> block(nthreads);
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        workers.emplace_back([&, t, lo, hi] { block[t] = scan(lo, hi); });
    }
    for (auto& w : workers) w.join();

    std::pair<std::size_t, double> best = block[0];
    for (std::size_t t = 1; t < nthreads; ++t) {
        if (t * chunk >= n) break;
        if (block[t].second > best.second) best = block[t];
    }
    return best;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(max_threads()), n);
    if (nthreads <= 1 || n < 32) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& w : workers) w.join();
}

} // namespace discordlab
