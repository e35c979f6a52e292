#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace fracgrad {

inline constexpr const char* kThreadsEnvVar = "FRACGRAD_THREADS";

/// Requested worker count. threads == 0 means "resolve from FRACGRAD_THREADS,
/// else hardware concurrency".
struct Parallelism {
  unsigned threads = 0;
};

/// Parses FRACGRAD_THREADS. nullopt when unset; DomainError when set to
/// anything other than a positive integer.
std::optional<unsigned> threads_from_environment();

unsigned resolve_thread_count(Parallelism parallelism);

/// Splits [0, count) into contiguous blocks and runs body(begin, end) on up to
/// resolve_thread_count() threads. Blocks never share an index, so any body
/// that writes only to its own indices yields the same result as a
/// sequential loop. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t count, Parallelism parallelism,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace fracgrad
