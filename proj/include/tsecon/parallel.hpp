#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsecon::par {

enum class Exec { serial, parallel };

[[nodiscard]] inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs f(i) for i in [0, n).  Iterations must be independent; results must
/// be written to pre-sized per-index slots so the outcome is identical under
/// either policy.
template <class F>
void for_each_index(int n, Exec exec, F&& f) {
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < n; ++i) f(i);
}

/// Counts indices in [0, n) for which pred(i) is true.  Integer reduction,
/// so the count is exactly the same under either policy.
template <class Pred>
int count_indices(int n, Exec exec, Pred&& pred) {
  int count = 0;
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
    for (int i = 0; i < n; ++i) count += pred(i) ? 1 : 0;
    return count;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < n; ++i) count += pred(i) ? 1 : 0;
  return count;
}

}  // namespace tsecon::par
