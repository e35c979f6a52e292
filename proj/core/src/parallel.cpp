#include "fracgrad/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "fracgrad/errors.hpp"

namespace fracgrad {

std::optional<unsigned> threads_from_environment() {
  const char* raw = std::getenv(kThreadsEnvVar);
  if (raw == nullptr) return std::nullopt;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw DomainError(std::string(kThreadsEnvVar) + " must be a positive integer, got '" + raw +
                      "'");
  }
  return value;
}

unsigned resolve_thread_count(Parallelism parallelism) {
  if (parallelism.threads > 0) return parallelism.threads;
  if (auto env = threads_from_environment()) return *env;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, Parallelism parallelism,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(resolve_thread_count(parallelism), count);
  if (workers <= 1) {
    body(0, count);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t begin, std::size_t end) {
    try {
      body(begin, end);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const std::size_t block = count / workers;
  const std::size_t remainder = count % workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  std::size_t begin = 0;
  std::size_t first_end = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t end = begin + block + (w < remainder ? 1 : 0);
    if (w == 0) {
      first_end = end;
    } else {
      pool.emplace_back(run, begin, end);
    }
    begin = end;
  }
  run(0, first_end);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fracgrad
