#pragma once

namespace gqd::parallel {

/// Thread cap from GQD_THREADS (0 or unset = OpenMP default).
int max_threads();

/// Overrides GQD_THREADS for the current process; 0 restores the default.
void set_max_threads(int threads);

}  // namespace gqd::parallel
