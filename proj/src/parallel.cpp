#include "pconvex/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pconvex {

namespace {

// Threads pull chunks from an atomic counter; partials land in a vector
// indexed by chunk, and the final sum runs in chunk order.
template <typename T>
std::vector<T> run_chunks(long long n_chunks, long long count, long long chunk_size,
                          const std::function<T(long long, long long, long long)>& partial) {
  std::vector<T> partials(static_cast<size_t>(n_chunks));
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const long long workers =
      std::min<long long>(static_cast<long long>(hw), n_chunks);
  if (workers <= 1 || count < 2 * chunk_size) {
    for (long long c = 0; c < n_chunks; ++c) {
      const long long lo = c * chunk_size;
      const long long hi = std::min(count, lo + chunk_size);
      partials[static_cast<size_t>(c)] = partial(c, lo, hi);
    }
    return partials;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    while (true) {
      const long long c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const long long lo = c * chunk_size;
      const long long hi = std::min(count, lo + chunk_size);
      try {
        partials[static_cast<size_t>(c)] = partial(c, lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (long long w = 0; w < workers; ++w) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return partials;
}

}  // namespace

double chunked_sum(long long count, long long chunk_size,
                   const std::function<double(long long, long long, long long)>& partial) {
  if (count <= 0) return 0.0;
  const long long n_chunks = (count + chunk_size - 1) / chunk_size;
  const auto partials = run_chunks<double>(n_chunks, count, chunk_size, partial);
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

PairSum chunked_pair_sum(
    long long count, long long chunk_size,
    const std::function<PairSum(long long, long long, long long)>& partial) {
  if (count <= 0) return {};
  const long long n_chunks = (count + chunk_size - 1) / chunk_size;
  const auto partials = run_chunks<PairSum>(n_chunks, count, chunk_size, partial);
  PairSum total;
  for (const PairSum& p : partials) {
    total.a += p.a;
    total.b += p.b;
  }
  return total;
}

}  // namespace pconvex
