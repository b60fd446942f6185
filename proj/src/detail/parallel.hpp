#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace srnet::detail {

int effective_threads();

/// Runs fn(begin, end) over a fixed partition of [0, count). The partition
/// depends only on count and the thread budget, so results are reproducible
/// for any fixed thread setting as long as the chunks write disjoint data.
template <typename Fn>
void parallel_for(long long count, Fn&& fn) {
    const int nt = effective_threads();
    if (nt <= 1 || count < 2) {
        fn(0LL, count);
        return;
    }
    const int chunks = static_cast<int>(std::min<long long>(nt, count));
    std::vector<std::thread> threads;
    threads.reserve(chunks - 1);
    const long long per = (count + chunks - 1) / chunks;
    for (int t = 1; t < chunks; ++t) {
        const long long b = t * per;
        const long long e = std::min(count, b + per);
        if (b >= e) break;
        threads.emplace_back([&fn, b, e] { fn(b, e); });
    }
    fn(0LL, std::min(count, per));
    for (auto& th : threads) th.join();
}

}  // namespace srnet::detail
