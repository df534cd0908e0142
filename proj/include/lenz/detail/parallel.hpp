#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace lenz::detail {

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(task) for task in [0, tasks) and returns the per-task results in task order.
/// Task t goes to worker t % workers; the caller reduces the returned vector sequentially,
/// so the result never depends on the worker count.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t tasks, unsigned workers, Fn fn) {
    std::vector<Result> out(tasks);
    workers = std::max(1u, std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks; ++t) out[t] = fn(t);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t t = w; t < tasks; t += workers) out[t] = fn(t);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace lenz::detail
