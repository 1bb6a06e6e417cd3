#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <vector>

namespace iesieve {

/// Worker threads used by parallel loops; 1 means run inline.
unsigned thread_count() noexcept;
void set_thread_count(unsigned threads);

namespace detail {

/// Runs job(chunk) for chunk in [0, chunks) on up to thread_count() threads.
/// Rethrows the first exception raised by any job.
void run_chunks(std::size_t chunks, const std::function<void(std::size_t)>& job);

/// Chunking depends only on the iteration count, never on the thread count,
/// so partial results are combined in the same order for every setting.
inline constexpr std::uint64_t kMaxChunks = 256;
inline constexpr std::uint64_t kMinChunkLength = 1024;

inline std::uint64_t chunk_count(std::uint64_t count, std::uint64_t grain) {
  if (count == 0) return 0;
  return std::clamp<std::uint64_t>(count / std::max<std::uint64_t>(grain, 1), 1, kMaxChunks);
}

}  // namespace detail

/// Sums fn(begin, end) over a fixed partition of [0, count). The partial sums
/// are added in partition order, so the result is bit-identical for every
/// thread count. `grain` is the smallest worthwhile chunk length.
template <class Ring, class ChunkFn>
Ring parallel_reduce(std::uint64_t count, ChunkFn&& fn,
                     std::uint64_t grain = detail::kMinChunkLength) {
  const std::uint64_t chunks = detail::chunk_count(count, grain);
  if (chunks <= 1) return count == 0 ? Ring{0} : Ring(fn(std::uint64_t{0}, count));
  std::vector<Ring> partial(chunks, Ring{0});
  detail::run_chunks(chunks, [&](std::size_t c) {
    const std::uint64_t begin = count * c / chunks;
    const std::uint64_t end = count * (c + 1) / chunks;
    partial[c] = fn(begin, end);
  });
  Ring total{0};
  for (const Ring& p : partial) total = total + p;
  return total;
}

/// Calls fn(begin, end) over a fixed partition of [0, count). fn must only
/// touch state owned by its own range.
template <class ChunkFn>
void parallel_for(std::uint64_t count, ChunkFn&& fn,
                  std::uint64_t grain = detail::kMinChunkLength) {
  const std::uint64_t chunks = detail::chunk_count(count, grain);
  if (chunks <= 1) {
    if (count != 0) fn(std::uint64_t{0}, count);
    return;
  }
  detail::run_chunks(chunks, [&](std::size_t c) {
    fn(count * c / chunks, count * (c + 1) / chunks);
  });
}

}  // namespace iesieve
