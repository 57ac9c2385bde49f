#include "tourney/subset_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tourney {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  // result * (n-k+i) / i stays exact at every step; fits for n <= 63.
  for (int i = 1; i <= k; ++i) result = result / i * (n - k + i) + result % i * (n - k + i) / i;
  return result;
}

VertexSet unrank_colex(int k, std::uint64_t rank) {
  VertexSet set = 0;
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c, i) <= rank.
    int c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    set |= bit(c);
    rank -= binomial(c, i);
  }
  return set;
}

VertexSet next_colex(VertexSet set) {
  const VertexSet low = set & -set;
  const VertexSet ripple = set + low;
  return ripple | (((set ^ ripple) >> 2) / low);
}

std::optional<VertexSet> first_subset_serial(int n, int k, const std::function<bool(VertexSet)>& accept) {
  if (k < 0 || k > n) return std::nullopt;
  if (k == 0) return accept(0) ? std::optional<VertexSet>(0) : std::nullopt;
  const VertexSet limit = bit(n);
  for (VertexSet set = all_vertices(k); set < limit; set = next_colex(set)) {
    if (accept(set)) return set;
    if (set == all_vertices(n)) break;  // next_colex would overflow past bit 63
  }
  return std::nullopt;
}

std::optional<VertexSet> first_subset(int n, int k, const std::function<bool(VertexSet)>& accept) {
  if (k <= 0 || k >= n) return first_subset_serial(n, k, accept);
  const std::uint64_t total = binomial(n, k);
  constexpr std::uint64_t kChunk = 2048;
  const std::int64_t chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    const std::uint64_t begin = static_cast<std::uint64_t>(chunk) * kChunk;
    if (begin >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t end = std::min(total, begin + kChunk);
    VertexSet set = unrank_colex(k, begin);
    for (std::uint64_t rank = begin; rank < end; ++rank, set = next_colex(set)) {
      if (!accept(set)) continue;
      std::uint64_t seen = best.load();
      while (rank < seen && !best.compare_exchange_weak(seen, rank)) {
      }
      break;
    }
  }

  const std::uint64_t found = best.load();
  if (found == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return unrank_colex(k, found);
}

}  // namespace tourney
