#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "tourney/tournament.hpp"

namespace tourney {

/// C(n, k), exact for n <= 63.
std::uint64_t binomial(int n, int k);

/// The k-subset of {0..n-1} at position `rank` in colex order. For a fixed
/// size, colex order is the numeric order of the bit masks.
VertexSet unrank_colex(int k, std::uint64_t rank);

/// Next mask with the same popcount (Gosper's hack); `set` must be non-zero.
VertexSet next_colex(VertexSet set);

/// First k-subset of {0..n-1} in colex order accepted by `accept`.
/// Reference implementation: a single sequential scan.
std::optional<VertexSet> first_subset_serial(int n, int k, const std::function<bool(VertexSet)>& accept);

/// Same result as first_subset_serial; the colex range is cut into chunks
/// scanned by OpenMP threads and the lowest accepted rank wins. `accept` is
/// called concurrently and must not touch shared mutable state.
std::optional<VertexSet> first_subset(int n, int k, const std::function<bool(VertexSet)>& accept);

}  // namespace tourney
