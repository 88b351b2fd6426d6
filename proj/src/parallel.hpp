// Copyright 2026 The lhred Authors
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

#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace lhred::detail {

/// Evaluates \p block_fn on every block id in [0, n_blocks) spread across
/// \p workers threads, then folds the per-worker results in worker order with
/// \p merge. Output is worker-count independent as long as merge is a
/// deterministic selection under a total order.
template <class Result, class BlockFn, class Merge>
Result reduce_blocks(std::uint64_t n_blocks, unsigned workers, Result identity, BlockFn block_fn, Merge merge) {
    if (workers < 1)
        workers = 1;
    if (workers > n_blocks)
        workers = static_cast<unsigned>(n_blocks > 0 ? n_blocks : 1);

    std::vector<Result> partial(workers, identity);
    auto run = [&](unsigned w) {
        for (std::uint64_t b = w; b < n_blocks; b += workers)
            partial[w] = merge(partial[w], block_fn(b));
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    Result total = identity;
    for (const auto &r : partial)
        total = merge(total, r);
    return total;
}

} // namespace lhred::detail
