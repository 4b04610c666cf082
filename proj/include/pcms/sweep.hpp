#pragma once

// Grid sweep engines behind every axiom check.
//
// A check flattens its tuple grid to an index range [0, n), maps each index
// to a slack value, and the sweep reduces to the minimum under the total
// order (slack, index). Reductions carry only (double, size_t), so the hot
// loop never allocates; the winning tuple's witness is materialized once
// from the argmin index. Because min over a total order is associative and
// commutative, the OpenMP path returns exactly the same result as the
// serial reference no matter how iterations are split.
//
// Callers decode indices big-endian (decode_index), first witness component
// slowest-varying, so on ascending grids the index tie-break coincides with
// lexicographic witness order.

#include <array>
#include <cstddef>
#include <limits>
#include <utility>

namespace pcms {

enum class ExecMode { Serial, Parallel };

template <std::size_t K>
std::array<std::size_t, K> decode_index(std::size_t idx,
                                        const std::array<std::size_t, K>& extents) {
    std::array<std::size_t, K> out{};
    for (std::size_t d = K; d-- > 0;) {
        out[d] = idx % extents[d];
        idx /= extents[d];
    }
    return out;
}

struct SweepResult {
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;  // index of the winning tuple; meaningful when evaluated > 0
    std::size_t evaluated = 0;
};

template <class Slack>
SweepResult sweep_min_serial(std::size_t n, Slack&& slack_of) {
    SweepResult out;
    out.evaluated = n;
    for (std::size_t i = 0; i < n; ++i) {
        double s = slack_of(i);
        if (s < out.min_slack) {
            out.min_slack = s;
            out.argmin = i;
        }
    }
    return out;
}

template <class Slack>
SweepResult sweep_min_parallel(std::size_t n, Slack&& slack_of) {
    SweepResult out;
    out.evaluated = n;
#ifdef _OPENMP
    #pragma omp parallel
    {
        double local_slack = std::numeric_limits<double>::infinity();
        std::size_t local_arg = n;
        #pragma omp for nowait schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            double s = slack_of(static_cast<std::size_t>(i));
            if (s < local_slack) {
                local_slack = s;
                local_arg = static_cast<std::size_t>(i);
            }
        }
        #pragma omp critical(pcms_sweep_min_merge)
        {
            if (local_arg < n &&
                (local_slack < out.min_slack ||
                 (local_slack == out.min_slack && local_arg < out.argmin)))
            {
                out.min_slack = local_slack;
                out.argmin = local_arg;
            }
        }
    }
    return out;
#else
    return sweep_min_serial(n, std::forward<Slack>(slack_of));
#endif
}

template <class Slack>
SweepResult sweep_min(std::size_t n, Slack&& slack_of, ExecMode mode = ExecMode::Parallel) {
    return mode == ExecMode::Parallel ? sweep_min_parallel(n, std::forward<Slack>(slack_of))
                                      : sweep_min_serial(n, std::forward<Slack>(slack_of));
}

// Counting variant: counts indices matching a predicate and keeps the
// smallest matching index.
struct CountResult {
    std::size_t count = 0;
    std::size_t first = 0;  // smallest matching index; meaningful when count > 0
};

template <class Pred>
CountResult sweep_count_serial(std::size_t n, Pred&& pred) {
    CountResult out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!pred(i)) continue;
        if (out.count == 0) out.first = i;
        ++out.count;
    }
    return out;
}

template <class Pred>
CountResult sweep_count_parallel(std::size_t n, Pred&& pred) {
#ifdef _OPENMP
    CountResult out;
    #pragma omp parallel
    {
        CountResult local;
        local.first = n;
        #pragma omp for nowait schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            if (!pred(static_cast<std::size_t>(i))) continue;
            if (local.count == 0) local.first = static_cast<std::size_t>(i);
            ++local.count;
        }
        #pragma omp critical(pcms_sweep_count_merge)
        {
            if (local.count > 0) {
                if (out.count == 0 || local.first < out.first) out.first = local.first;
                out.count += local.count;
            }
        }
    }
    return out;
#else
    return sweep_count_serial(n, std::forward<Pred>(pred));
#endif
}

template <class Pred>
CountResult sweep_count(std::size_t n, Pred&& pred, ExecMode mode = ExecMode::Parallel) {
    return mode == ExecMode::Parallel ? sweep_count_parallel(n, std::forward<Pred>(pred))
                                      : sweep_count_serial(n, std::forward<Pred>(pred));
}

}  // namespace pcms
