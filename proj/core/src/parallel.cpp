#include "arithcomp/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace arithcomp {

unsigned default_workers() {
  if (const char* env = std::getenv("ARITHCOMP_WORKERS"); env != nullptr) {
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc{} && value > 0) {
      return value;
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t from,
                                                                     std::uint64_t to,
                                                                     unsigned parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pieces;
  if (from > to) {
    return pieces;
  }
  const std::uint64_t total = to - from + 1;
  const std::uint64_t count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(parts, total));
  const std::uint64_t base = total / count;
  const std::uint64_t extra = total % count;
  std::uint64_t lo = from;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t size = base + (i < extra ? 1 : 0);
    pieces.emplace_back(lo, lo + size - 1);
    lo += size;
  }
  return pieces;
}

void run_partitioned(std::uint64_t from, std::uint64_t to, unsigned workers,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  const auto pieces = partition_range(from, to, std::max(1U, workers));
  std::vector<std::exception_ptr> errors(pieces.size());
  if (pieces.size() <= 1) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      body(i, pieces[i].first, pieces[i].second);
    }
    return;
  }
  {
    std::vector<std::jthread> threads;
    threads.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          body(i, pieces[i].first, pieces[i].second);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
}

}  // namespace arithcomp
