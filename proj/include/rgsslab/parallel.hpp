#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace rgsslab {

enum class Exec { Serial, Parallel };

// Thread cap honoured by every parallel kernel; 0 means the OpenMP default.
void set_thread_cap(int threads);
int thread_cap();
// Reads RGSSLAB_THREADS; malformed or non-positive values are ignored.
void apply_thread_env();

namespace detail {
void parallel_for_impl(std::size_t n, void (*body)(void*, std::size_t), void* ctx);
}

// Runs f(i) for i in [0, n). Exceptions are collected per index and the lowest-index one is
// rethrown, so error reporting does not depend on scheduling.
template <class F>
void for_each_index(std::size_t n, F&& f, Exec exec) {
    std::vector<std::exception_ptr> errors(n);
    auto guarded = [&](std::size_t i) {
        try {
            f(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    } else {
        using G = decltype(guarded);
        detail::parallel_for_impl(
            n, [](void* ctx, std::size_t i) { (*static_cast<G*>(ctx))(i); }, &guarded);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class T, class F>
std::vector<T> map_index(std::size_t n, F&& f, Exec exec) {
    std::vector<T> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = f(i); }, exec);
    return out;
}

}  // namespace rgsslab
