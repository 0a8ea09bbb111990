#include "rgsslab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace rgsslab {

namespace {
std::atomic<int> g_cap{0};
}

void set_thread_cap(int threads) { g_cap.store(threads > 0 ? threads : 0); }

int thread_cap() { return g_cap.load(); }

void apply_thread_env() {
    const char* env = std::getenv("RGSSLAB_THREADS");
    if (!env) return;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v > 0) set_thread_cap(v);
    } catch (const std::exception&) {
    }
}

namespace detail {

void parallel_for_impl(std::size_t n, void (*body)(void*, std::size_t), void* ctx) {
    const int cap = thread_cap();
    const int threads = cap > 0 ? cap : omp_get_max_threads();
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < count; ++i) body(ctx, static_cast<std::size_t>(i));
}

}  // namespace detail
}  // namespace rgsslab
