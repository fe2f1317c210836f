#pragma once

#ifdef ECDP_HAVE_OPENMP
#include <omp.h>
#else
inline int omp_get_thread_num() { return 0; }
inline int omp_get_max_threads() { return 1; }
inline void omp_set_num_threads(int) {}
#endif

namespace ecdp {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial one is kept for testing and benchmarking.
enum class Execution { Serial, Parallel };

}  // namespace ecdp
