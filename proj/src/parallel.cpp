#include "fbp/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fbp {

namespace {
int configured_workers = 0; // 0 = hardware default
}

int worker_count() {
    if (const char* env = std::getenv("FBP_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // fall through to other sources
        }
    }
    if (configured_workers > 0) return configured_workers;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_count(int n) { configured_workers = n; }

} // namespace fbp
