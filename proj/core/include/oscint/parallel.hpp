// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef OSCINT_PARALLEL_HPP
#define OSCINT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace oscint {

/// Deterministic parallel map: f(i) runs for i in [0, n), each index writing
/// only its own slot; callers reduce in index order afterwards. Exceptions
/// are captured and rethrown on the calling thread.
template <class F>
void parallel_for(size_t n, int threads, F&& f) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (n == 0) return;
    if (threads == 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const size_t nt = std::min<size_t>(static_cast<size_t>(threads), n);
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mx;
    for (size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = t; i < n; i += nt) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mx);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace oscint

#endif
