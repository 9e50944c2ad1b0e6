#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace arithcomp {

/// Worker count from ARITHCOMP_WORKERS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned default_workers();

/// Splits [from, to] into at most `parts` contiguous ascending pieces.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t from,
                                                                     std::uint64_t to,
                                                                     unsigned parts);

/// Runs body(index, lo, hi) for every piece of [from, to] on up to `workers`
/// threads. The exception from the lowest-indexed failing piece is rethrown,
/// so failures surface identically for any worker count.
void run_partitioned(std::uint64_t from, std::uint64_t to, unsigned workers,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace arithcomp
