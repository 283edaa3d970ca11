#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace paw {

/// Every data-parallel kernel in this project takes an explicit policy.
/// `serial` is the reference path the tests compare against; `parallel`
/// uses OpenMP when compiled in and silently degrades to serial otherwise.
/// Results must be identical under either policy.
enum class ExecPolicy { serial, parallel };

inline int worker_count(ExecPolicy policy) {
#ifdef _OPENMP
    if (policy == ExecPolicy::parallel) {
        return omp_get_max_threads();
    }
#else
    (void)policy;
#endif
    return 1;
}

/// Runs fn(i) for every i in [0, count). fn must not throw.
template <typename Fn>
void for_each_index(std::uint64_t count, ExecPolicy policy, Fn&& fn) {
#ifdef _OPENMP
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            fn(static_cast<std::uint64_t>(i));
        }
        return;
    }
#endif
    (void)policy;
    for (std::uint64_t i = 0; i < count; ++i) {
        fn(i);
    }
}

/// Least index in [0, count) where ok(i) is false, or nullopt if none.
/// ok must not throw; under the parallel policy it may be evaluated for
/// indices past the first violation, so it must be side-effect safe.
template <typename Pred>
std::optional<std::uint64_t> first_violation(std::uint64_t count, ExecPolicy policy, Pred&& ok) {
#ifdef _OPENMP
    if (policy == ExecPolicy::parallel) {
        std::atomic<std::uint64_t> least{count};
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            const auto u = static_cast<std::uint64_t>(i);
            if (u < least.load(std::memory_order_relaxed) && !ok(u)) {
                std::uint64_t cur = least.load(std::memory_order_relaxed);
                while (u < cur && !least.compare_exchange_weak(cur, u)) {
                }
            }
        }
        const std::uint64_t found = least.load();
        if (found < count) {
            return found;
        }
        return std::nullopt;
    }
#endif
    (void)policy;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!ok(i)) {
            return i;
        }
    }
    return std::nullopt;
}

/// Index-ordered filter-map: emit(i, out) appends any results for index i
/// to out; the concatenation over i = 0..count-1 is returned in index
/// order regardless of policy. emit must not throw.
template <typename T, typename Emit>
std::vector<T> collect_ordered(std::uint64_t count, ExecPolicy policy, Emit&& emit) {
#ifdef _OPENMP
    if (policy == ExecPolicy::parallel && count > 1) {
        const int chunks = omp_get_max_threads() * 4;
        const std::uint64_t chunk_size = (count + chunks - 1) / chunks;
        std::vector<std::vector<T>> partial(chunks);
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 0; c < chunks; ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * chunk_size;
            const std::uint64_t hi = std::min(count, lo + chunk_size);
            for (std::uint64_t i = lo; i < hi; ++i) {
                emit(i, partial[c]);
            }
        }
        std::vector<T> out;
        for (auto& part : partial) {
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
#endif
    (void)policy;
    std::vector<T> out;
    for (std::uint64_t i = 0; i < count; ++i) {
        emit(i, out);
    }
    return out;
}

} // namespace paw
