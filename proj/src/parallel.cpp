#include "itnlab/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace itnlab {

void parallel_for(long n, const std::function<void(long)>& body, int threads) {
    if (n <= 0) return;
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, n)));
    if (threads == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    const long block = (n + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const long lo = w * block;
        const long hi = std::min(n, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (long i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace itnlab
