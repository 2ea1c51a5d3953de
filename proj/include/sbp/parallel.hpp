#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace sbp::detail {

inline int default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs body(index) for index = 0..count-1 on up to `jobs` threads, pulling
// indices dynamically. The first exception thrown by any worker is rethrown
// on the calling thread after all workers join.
template <typename Body>
void for_each_index(std::int64_t count, int jobs, Body&& body) {
    if (count <= 0) {
        return;
    }
    if (jobs < 1) {
        jobs = 1;
    }
    if (jobs == 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int width = static_cast<int>(std::min<std::int64_t>(jobs, count));
    threads.reserve(static_cast<std::size_t>(width) - 1);
    for (int t = 1; t < width; ++t) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto& th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

// Splits [0, total) into `jobs` contiguous chunks and runs
// body(begin, end, worker_index) for each, in parallel.
template <typename Body>
void for_each_chunk(std::uint64_t total, int jobs, Body&& body) {
    if (total == 0) {
        return;
    }
    if (jobs < 1) {
        jobs = 1;
    }
    std::uint64_t width = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    std::uint64_t base = total / width;
    std::uint64_t extra = total % width;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < width; ++w) {
        std::uint64_t len = base + (w < extra ? 1 : 0);
        ranges.emplace_back(begin, begin + len);
        begin += len;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(ranges.size() - 1);
    auto run = [&](std::size_t w) {
        try {
            body(ranges[w].first, ranges[w].second, static_cast<int>(w));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    };
    for (std::size_t w = 1; w < ranges.size(); ++w) {
        threads.emplace_back(run, w);
    }
    run(0);
    for (auto& th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace sbp::detail
