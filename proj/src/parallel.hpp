// SPDX-License-Identifier: Apache-2.0
#ifndef STFA_SRC_PARALLEL_HPP
#define STFA_SRC_PARALLEL_HPP

#include <exception>
#include <thread>
#include <vector>

namespace stfa::detail {

// Runs fn(i) for i in [0, count) on `threads` workers (0 = hardware
// concurrency). Work is split into contiguous chunks; each index is
// processed exactly once, so results are identical for any thread count.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for_index(Eigen::Index count, int threads, Fn&& fn) {
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw > 0 ? static_cast<int>(hw) : 1;
    }
    if (threads > count) threads = static_cast<int>(count);
    if (threads <= 1) {
        for (Eigen::Index i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    const Eigen::Index chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const Eigen::Index begin = static_cast<Eigen::Index>(t) * chunk;
        const Eigen::Index end = std::min(begin + chunk, count);
        pool.emplace_back([&, t, begin, end] {
            try {
                for (Eigen::Index i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace stfa::detail

#endif  // STFA_SRC_PARALLEL_HPP
