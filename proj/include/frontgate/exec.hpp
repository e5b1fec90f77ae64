#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace frontgate {

/// How independent work items (sweep points, grid points) are scheduled.
/// `serial` is the reference path kept for testing; `parallel` uses OpenMP.
enum class ExecPolicy { serial, parallel };

/// Runs body(i) for i in [0, n). Exceptions are collected per index and the one
/// with the smallest index is rethrown, so failures are reported the same way
/// under both policies.
template <typename Body>
void for_each_index(std::size_t n, ExecPolicy policy, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace frontgate
