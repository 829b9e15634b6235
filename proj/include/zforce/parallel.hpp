#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zforce {

/// Worker count for an OpenMP region; 0 means the runtime default.
inline auto worker_count(unsigned requested) -> int
{
#ifdef _OPENMP
    return requested == 0 ? omp_get_max_threads() : static_cast<int>(requested);
#else
    (void)requested;
    return 1;
#endif
}

} // namespace zforce
