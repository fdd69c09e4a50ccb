#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hyperdual::detail {

inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 16;

/// Splits [0, total) into fixed-size chunks, runs `body(begin, end)` on each
/// chunk across worker threads and folds the per-chunk results in chunk
/// order with `merge`. The chunking does not depend on the thread count, so
/// the folded result is bit-identical from run to run.
template <class Result, class Body, class Merge>
Result chunked_reduce(std::uint64_t total, Body body, Merge merge) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, (total + kChunkSize - 1) / kChunkSize);
  std::vector<Result> partial(chunks);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(hw, chunks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      if (failed) return;
      try {
        const std::uint64_t begin = c * kChunkSize;
        partial[c] = body(begin, std::min(total, begin + kChunkSize));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
  }
  if (failure) std::rethrow_exception(failure);

  Result out = std::move(partial[0]);
  for (std::uint64_t c = 1; c < chunks; ++c) merge(out, partial[c]);
  return out;
}

}  // namespace hyperdual::detail
