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

#include "pstab/exec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pstab::exec {

namespace {

int hardware_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::atomic<int> g_max_threads{0};  // 0 = not set, use hardware

}  // namespace

void set_max_threads(int threads) {
    g_max_threads.store(threads < 1 ? 0 : threads, std::memory_order_relaxed);
}

int max_threads() {
    const int t = g_max_threads.load(std::memory_order_relaxed);
    return t == 0 ? hardware_threads() : t;
}

int workers_for(std::size_t items, std::size_t min_items_per_worker) {
    if (items == 0) {
        return 1;
    }
    const std::size_t by_grain =
        min_items_per_worker == 0 ? items : items / std::max<std::size_t>(1, min_items_per_worker);
    const std::size_t cap = std::min<std::size_t>(items, std::max<std::size_t>(1, by_grain));
    return static_cast<int>(std::min<std::size_t>(cap, static_cast<std::size_t>(max_threads())));
}

}  // namespace pstab::exec
