#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

#ifdef CHEEGER_HAVE_OPENMP
#include <omp.h>
#endif

namespace cheeger {

enum class Execution { Serial, Parallel };

/// Number of worker threads a Parallel map will use.
inline int parallel_threads() {
#ifdef CHEEGER_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Evaluates `f` at every element of `xs`. Results are stored by index, so
/// the output is identical for Serial and Parallel execution. The first
/// exception (by index, not by time) is rethrown after the loop.
template <class T, class F>
auto map_indexed(const std::vector<T>& xs, F&& f, Execution exec)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
    using R = std::invoke_result_t<F&, const T&>;
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(xs.size());
    std::vector<R> out(xs.size());
    std::vector<std::exception_ptr> errors(xs.size());

    if (exec == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                out[i] = f(xs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
#ifdef CHEEGER_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                out[i] = f(xs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace cheeger
