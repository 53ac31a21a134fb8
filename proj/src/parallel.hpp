// Copyright 2026 The couponlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COUPONLAB_PARALLEL_HPP
#define COUPONLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace couponlab {

inline int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for every i in [0, count). Work is chunked statically across
// threads; callers make results schedule-independent by writing into slot i.
template <typename Fn>
void parallel_for_index(std::uint64_t count, int threads, Fn&& fn) {
    const int nthreads = std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1));
    if (nthreads <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::uint64_t chunk = (count + static_cast<std::uint64_t>(nthreads) - 1) /
                                static_cast<std::uint64_t>(nthreads);
    for (int t = 0; t < nthreads; ++t) {
        const std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
        const std::uint64_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&, begin, end] {
            try {
                for (std::uint64_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace couponlab

#endif
