#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gallai {

/// Resolves a requested worker count: values < 1 mean "default", taken from
/// GALLAI_WORKERS when set and otherwise from the hardware.
int resolve_workers(int requested);

/// Runs f(task, worker) for task in [0, task_count) on `workers` threads.
/// Tasks are handed out in increasing index order. The first exception thrown
/// by any task is rethrown on the calling thread after all workers stop.
template <class F>
void parallel_tasks(int task_count, int workers, F&& f) {
    workers = std::clamp(workers, 1, std::max(task_count, 1));
    if (workers == 1) {
        for (int t = 0; t < task_count; ++t) f(t, 0);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&](int worker) {
        try {
            for (int t = next.fetch_add(1); t < task_count; t = next.fetch_add(1)) f(t, worker);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(task_count);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace gallai
