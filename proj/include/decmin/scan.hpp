#pragma once

// Subset-scan kernels. Every kernel walks an index range [0, count) where the
// caller maps an index to a subset (usually through deposit()). The serial
// versions are the reference; the OpenMP versions must return identical
// results, in particular the lowest index wins every tie.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>

#include "decmin/types.hpp"

namespace decmin::scan {

// Below this many indices the OpenMP kernels run serially.
inline constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 12;

template <class T>
struct Best {
  T value{};
  std::int64_t index = -1;  // -1: every index was skipped
  bool found() const { return index >= 0; }
};

namespace serial {

template <class Pred>
std::optional<std::int64_t> first_match(std::int64_t count, Pred&& pred) {
  for (std::int64_t k = 0; k < count; ++k)
    if (pred(k)) return k;
  return std::nullopt;
}

// Minimum of f over indices where f returns a value; f returns optional<int64>.
template <class F>
Best<std::int64_t> min_value(std::int64_t count, F&& f) {
  Best<std::int64_t> best;
  for (std::int64_t k = 0; k < count; ++k) {
    auto v = f(k);
    if (v && (!best.found() || *v < best.value)) best = {*v, k};
  }
  return best;
}

template <class F>
Best<std::int64_t> max_value(std::int64_t count, F&& f) {
  Best<std::int64_t> best;
  for (std::int64_t k = 0; k < count; ++k) {
    auto v = f(k);
    if (v && (!best.found() || *v > best.value)) best = {*v, k};
  }
  return best;
}

// AND / OR of map(k) over indices with pred(k).
template <class Pred, class Map>
Mask and_reduce(std::int64_t count, Pred&& pred, Map&& map, Mask init) {
  Mask acc = init;
  for (std::int64_t k = 0; k < count; ++k)
    if (pred(k)) acc &= map(k);
  return acc;
}

template <class Pred, class Map>
Mask or_reduce(std::int64_t count, Pred&& pred, Map&& map) {
  Mask acc = 0;
  for (std::int64_t k = 0; k < count; ++k)
    if (pred(k)) acc |= map(k);
  return acc;
}

}  // namespace serial

template <class Pred>
std::optional<std::int64_t> first_match(std::int64_t count, Pred&& pred) {
  if (count < kParallelThreshold) return serial::first_match(count, pred);
  std::int64_t found = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : found)
  for (std::int64_t k = 0; k < count; ++k) {
    if (k < found && pred(k)) found = std::min(found, k);
  }
  if (found == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return found;
}

template <class F>
Best<std::int64_t> min_value(std::int64_t count, F&& f) {
  if (count < kParallelThreshold) return serial::min_value(count, f);
  // Per-thread best, then merge in thread order; ties go to the lower index.
  std::int64_t best_v = 0, best_k = -1;
#pragma omp parallel
  {
    std::int64_t lv = 0, lk = -1;
#pragma omp for schedule(static) nowait
    for (std::int64_t k = 0; k < count; ++k) {
      auto v = f(k);
      if (v && (lk < 0 || *v < lv)) { lv = *v; lk = k; }
    }
#pragma omp critical(decmin_scan_min)
    {
      if (lk >= 0 && (best_k < 0 || lv < best_v || (lv == best_v && lk < best_k))) {
        best_v = lv;
        best_k = lk;
      }
    }
  }
  return {best_v, best_k};
}

template <class F>
Best<std::int64_t> max_value(std::int64_t count, F&& f) {
  auto neg = min_value(count, [&](std::int64_t k) -> std::optional<std::int64_t> {
    auto v = f(k);
    if (!v) return std::nullopt;
    return -*v;
  });
  if (neg.found()) neg.value = -neg.value;
  return neg;
}

template <class Pred, class Map>
Mask and_reduce(std::int64_t count, Pred&& pred, Map&& map, Mask init) {
  if (count < kParallelThreshold) return serial::and_reduce(count, pred, map, init);
  Mask acc = init;
#pragma omp parallel for schedule(static) reduction(& : acc)
  for (std::int64_t k = 0; k < count; ++k)
    if (pred(k)) acc &= map(k);
  return acc;
}

template <class Pred, class Map>
Mask or_reduce(std::int64_t count, Pred&& pred, Map&& map) {
  if (count < kParallelThreshold) return serial::or_reduce(count, pred, map);
  Mask acc = 0;
#pragma omp parallel for schedule(static) reduction(| : acc)
  for (std::int64_t k = 0; k < count; ++k)
    if (pred(k)) acc |= map(k);
  return acc;
}

// Index count for scanning all subsets of `universe`.
inline std::int64_t subset_count(Subset universe) { return std::int64_t{1} << universe.size(); }

}  // namespace decmin::scan
