#pragma once

#include <cstddef>
#include <functional>

namespace flexcat {

/// Name of the environment variable that caps worker threads.
inline constexpr const char *kThreadsEnvVar = "FLEXCAT_THREADS";

/// FLEXCAT_THREADS if set to a positive integer, else hardware concurrency.
std::size_t configured_threads();

/// Runs body(i) for i in [0, count). Each index is handled by exactly one
/// worker, so writing results to slot i is race-free. The first exception
/// thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body,
                  std::size_t threads = configured_threads());

}  // namespace flexcat
