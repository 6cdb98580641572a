/*
   Copyright 2026 The bczlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Counter-based random numbers and deterministic chunked parallel loops.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace bcz {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform double in (0, 1], a pure function of (seed, index, draw).
inline double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t draw) {
  const std::uint64_t h = mix64(mix64(mix64(seed) ^ index) + draw);
  return static_cast<double>((h >> 11) + 1) * 0x1.0p-53;
}

/// Worker threads to use: hardware concurrency, capped by BCZ_LAB_THREADS.
unsigned worker_count();

/// Runs fn(begin, end) over consecutive chunks of [0, total) and returns the
/// per-chunk results in chunk order. The chunking does not depend on the
/// number of workers, so reductions over the result are reproducible.
template <class Partial, class Fn>
std::vector<Partial> map_chunks(std::uint64_t total, std::uint64_t chunk, unsigned max_workers,
                                Fn&& fn) {
  const std::uint64_t chunks = total == 0 ? 0 : (total + chunk - 1) / chunk;
  std::vector<Partial> out(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::uint64_t begin = c * chunk;
        out[c] = fn(begin, std::min(total, begin + chunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(max_workers, 1u), std::max<std::uint64_t>(chunks, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <class Partial, class Fn>
std::vector<Partial> map_chunks(std::uint64_t total, std::uint64_t chunk, Fn&& fn) {
  return map_chunks<Partial>(total, chunk, worker_count(), std::forward<Fn>(fn));
}

/// Pairwise (tree) reduction in index order; Partial needs merge(const Partial&).
template <class Partial>
Partial reduce_pairwise(std::vector<Partial> parts) {
  if (parts.empty()) return Partial{};
  while (parts.size() > 1) {
    std::vector<Partial> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
      Partial p = parts[i];
      p.merge(parts[i + 1]);
      next.push_back(std::move(p));
    }
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace bcz
