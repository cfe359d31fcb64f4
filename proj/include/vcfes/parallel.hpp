#pragma once

namespace vcfes::par {

/// Thread cap for OpenMP regions. Initialized from VCFES_THREADS on first
/// use (default: number of cores); settable at runtime for tests.
int max_threads();

void set_max_threads(int n);

}  // namespace vcfes::par
