// Copyright 2026 The PStabilizer Authors
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

#ifndef PSTAB_EXEC_HPP
#define PSTAB_EXEC_HPP

#include <cstddef>
#include <utility>

#include <omp.h>

namespace pstab::exec {

/// Caps the number of workers used by every parallel region in the library.
/// Values < 1 reset the cap to the hardware concurrency.
void set_max_threads(int threads);

/// Current worker cap (>= 1).
int max_threads();

/// Workers to use for a loop of `items` independent iterations. Small loops
/// run on one worker so that per-region startup cost never dominates.
int workers_for(std::size_t items, std::size_t min_items_per_worker = 1);

/// Runs fn(begin, end) over a static partition of [0, size). Dispatches at
/// most workers_for(size, grain) workers; falls back to one direct call when
/// a single worker is warranted or when already inside a parallel region
/// (regions do not nest). Callers own determinism: partitioning here never
/// feeds floating-point accumulation order.
template <typename Fn>
void parallel_for(std::size_t size, std::size_t grain, Fn&& fn) {
    if (size == 0) {
        return;
    }
    const int workers = workers_for(size, grain);
    if (workers <= 1 || omp_in_parallel() != 0) {
        fn(std::size_t{0}, size);
        return;
    }
#pragma omp parallel num_threads(workers)
    {
        const auto w = static_cast<std::size_t>(omp_get_thread_num());
        const auto team = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t begin = size * w / team;
        const std::size_t end = size * (w + 1) / team;
        if (begin < end) {
            fn(begin, end);
        }
    }
}

}  // namespace pstab::exec

#endif
