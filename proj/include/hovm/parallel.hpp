#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace hovm {

enum class Exec { serial, parallel };

void set_threads(int n);  // n <= 0 restores the runtime default
int threads();

// runs f(i) for i in [0, n); exceptions are captured and the first one rethrown
template <class F> void parallel_for(std::size_t n, Exec ex, F&& f) {
    if (ex == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err;
    std::mutex mu;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 32)
    for (long long i = 0; i < count; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace hovm
