#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace discordlab {

/// Thread budget: DISCORD_LAB_THREADS when set, hardware concurrency otherwise.
int max_threads();

/// Evaluate eval(i) for i in [0, n) and return the (index, value) pair with
/// the largest value. Ties resolve to the smallest index and the reduction
/// is deterministic: blocks are scanned contiguously and merged in block
/// order, so the result does not depend on the thread count.
std::pair<std::size_t, double> parallel_argmax(
    std::size_t n, const std::function<double(std::size_t)>& eval);

/// Plain blocked parallel loop; body must write to disjoint state per index.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace discordlab
