#ifndef CHAOS_NUMERIC_HPP
#define CHAOS_NUMERIC_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace chaos {

/* Neumaier-compensated accumulator.  Every long reduction in the project
 * goes through this; parallel reductions combine per-chunk accumulators in
 * chunk order, so results do not depend on the worker count. */
struct KahanSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void add(const KahanSum& o) {
        add(o.s);
        c += o.c;
    }
    double value() const { return s + c; }
};

/* Deterministic parallel sum of f(i) for i in [0, n): the index range is cut
 * into fixed-size chunks, each chunk is summed with compensation, and chunk
 * results are combined in index order regardless of how many threads ran. */
inline double parallel_sum(std::int64_t n, int threads,
                           const std::function<double(std::int64_t)>& f,
                           std::int64_t chunk = 1 << 14) {
    if (n <= 0) return 0.0;
    const std::int64_t nchunks = (n + chunk - 1) / chunk;
    std::vector<KahanSum> partial(static_cast<size_t>(nchunks));
    if (threads < 1) threads = 1;
    if (threads == 1 || nchunks == 1) {
        for (std::int64_t ci = 0; ci < nchunks; ++ci) {
            auto& acc = partial[static_cast<size_t>(ci)];
            const std::int64_t hi = std::min(n, (ci + 1) * chunk);
            for (std::int64_t i = ci * chunk; i < hi; ++i) acc.add(f(i));
        }
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::int64_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::int64_t ci = next.fetch_add(1);
                    if (ci >= nchunks) return;
                    auto& acc = partial[static_cast<size_t>(ci)];
                    const std::int64_t hi = std::min(n, (ci + 1) * chunk);
                    for (std::int64_t i = ci * chunk; i < hi; ++i) acc.add(f(i));
                }
            });
        for (auto& th : pool) th.join();
    }
    KahanSum total;
    for (const auto& p : partial) total.add(p);
    return total.value();
}

inline double lgamma_pos(double x) {
    // all Gamma arguments in this project are strictly positive
    return std::lgamma(x);
}

}  // namespace chaos

#endif
