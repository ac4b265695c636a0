#include "orlicz/kernels.hpp"

#include <cstdlib>
#include <string>

namespace orlicz::kernels {

void apply_thread_cap_from_env() {
#ifdef _OPENMP
    const char* env = std::getenv("ORLICZ_THREADS");
    if (env == nullptr || *env == '\0') return;
    try {
        const int cap = std::stoi(env);
        if (cap > 0) omp_set_num_threads(cap);
    } catch (const std::exception&) {
        // malformed values leave the OpenMP default in place
    }
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace orlicz::kernels
