#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace permpack {

/// Worker count to use: the requested value, or machine parallelism capped
/// at 16 when requested is 0.
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

/// Reduce over the index range [0, total) split into contiguous chunks, one
/// per worker. `chunk(lo, hi)` maps a subrange to a partial result; partial
/// results are merged in chunk order, so the outcome is independent of
/// thread scheduling and of the worker count.
template <class Result, class ChunkFn, class MergeFn>
Result chunked_reduce(std::uint64_t total, unsigned workers, ChunkFn chunk,
                      MergeFn merge) {
  workers = resolve_workers(workers);
  if (total == 0) return Result{};
  const std::uint64_t nchunks = std::min<std::uint64_t>(workers, total);
  if (nchunks <= 1) return chunk(0, total);

  std::vector<Result> partial(static_cast<size_t>(nchunks));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(nchunks));
  const std::uint64_t step = total / nchunks;
  const std::uint64_t rem = total % nchunks;
  std::uint64_t lo = 0;
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t hi = lo + step + (c < rem ? 1 : 0);
    threads.emplace_back([&partial, &chunk, c, lo, hi] {
      partial[static_cast<size_t>(c)] = chunk(lo, hi);
    });
    lo = hi;
  }
  for (auto& t : threads) t.join();

  Result result = std::move(partial.front());
  for (size_t c = 1; c < partial.size(); ++c)
    result = merge(std::move(result), std::move(partial[c]));
  return result;
}

}  // namespace permpack
