#pragma once

// Execution policy for the verification kernels. Exec::serial is the
// reference loop; Exec::parallel runs the same per-index body under
// OpenMP. Both must produce identical reports.

#include <omp.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wqo {

enum class Exec { serial, parallel };

/// Smallest i in [0, count) with fails(i), or count if none.
template <class Pred>
std::size_t first_failure(std::size_t count, Exec exec, Pred&& fails) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (fails(i)) return i;
    return count;
  }
  std::size_t first = count;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (u < first && fails(u)) first = u;
  }
  return first;
}

/// out[i] = make(i) for i in [0, count); the result order is independent of Exec.
template <class T, class Make>
std::vector<T> generate_indexed(std::size_t count, Exec exec, Make&& make) {
  std::vector<T> out(count);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = make(i);
    return out;
  }
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = make(static_cast<std::size_t>(i));
  return out;
}

}  // namespace wqo
