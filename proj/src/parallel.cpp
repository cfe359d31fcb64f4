#include "vcfes/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vcfes::par {

namespace {

int detect_default() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("VCFES_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1) n = cap;
        } catch (...) {
            // ignore malformed value, keep default
        }
    }
    return n < 1 ? 1 : n;
}

int& cap() {
    static int value = detect_default();
    return value;
}

}  // namespace

int max_threads() { return cap(); }

void set_max_threads(int n) { cap() = n < 1 ? 1 : n; }

}  // namespace vcfes::par
