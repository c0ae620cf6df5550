#pragma once

#include <cstdint>
#include <functional>

namespace pconvex {

/// Deterministic chunked reduction: items [0, count) are split into fixed
/// chunks, chunk partials are computed (possibly on several threads) and
/// summed in chunk order, so the result is bit-identical for any worker
/// count. `partial` receives (chunk_index, begin, end) and returns the sum
/// over that range.
double chunked_sum(long long count, long long chunk_size,
                   const std::function<double(long long, long long, long long)>& partial);

/// Two accumulators per chunk (e.g. sum and sum of squares).
struct PairSum {
  double a = 0.0;
  double b = 0.0;
};
PairSum chunked_pair_sum(
    long long count, long long chunk_size,
    const std::function<PairSum(long long, long long, long long)>& partial);

}  // namespace pconvex
