#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flowfields {

/// threads <= 0 selects the OpenMP default (all hardware threads).
inline int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

}  // namespace flowfields
