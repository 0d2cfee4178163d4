#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace intcay {

/// Selects the serial reference loop or the OpenMP kernel. Both must produce
/// identical results; the serial path is what the tests compare against.
enum class Execution { Serial, Parallel };

/// Runs body(i) for i in [0, n). Exceptions thrown inside the OpenMP region
/// are captured and the first one is rethrown on the calling thread.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
    if (exec == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr first;
    std::mutex guard;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace intcay
