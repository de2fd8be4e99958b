#pragma once

// Brute-force ground truth at desk scale: enumerate the integer points of
// B'(p) inside a box and pick optimizers by direct comparison.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "decmin/core.hpp"

namespace decmin {

inline constexpr std::size_t kDefaultMaxPoints = 1000000;

struct EnumerationBudget {
  IntVector lower, upper;
  std::size_t max_points = kDefaultMaxPoints;  // cap on the box size
};

/// [p({s}), p(S) - p(S - s)] per element when all of these are finite. These
/// bounds hold for every member, so enumeration inside them is exhaustive.
std::optional<EnumerationBudget> natural_bounds(const SupermodularInstance& inst);

/// Members in the box, lexicographic order. kBudgetExceeded if the box holds
/// more than max_points points.
std::vector<IntVector> enumerate_members(const SupermodularInstance& inst,
                                         const EnumerationBudget& budget);
std::vector<IntVector> enumerate_members_serial(const SupermodularInstance& inst,
                                                const EnumerationBudget& budget);

/// Optimizers over an arbitrary finite point list (lexicographic order kept).
std::vector<IntVector> dec_min_of(const std::vector<IntVector>& points);
std::vector<IntVector> inc_max_of(const std::vector<IntVector>& points);
std::pair<std::int64_t, std::vector<IntVector>> min_square_sum_of(const std::vector<IntVector>& points);

std::vector<IntVector> brute_dec_min(const SupermodularInstance& inst, const EnumerationBudget& budget);
std::vector<IntVector> brute_inc_max(const SupermodularInstance& inst, const EnumerationBudget& budget);
std::pair<std::int64_t, std::vector<IntVector>> brute_min_sqsum(const SupermodularInstance& inst,
                                                                const EnumerationBudget& budget);

/// Grid of candidate dual vectors: candidates[s] lists the values tried for pi(s).
struct DualGrid {
  std::vector<IntVector> candidates;
  std::size_t max_points = kDefaultMaxPoints;
};

/// The same candidate list for every element.
DualGrid uniform_grid(int n, const IntVector& values);

/// Maximum dual value over the grid; first maximizer in lexicographic grid order.
std::pair<std::int64_t, IntVector> brute_dual_max(const SupermodularInstance& inst, const DualGrid& grid);

}  // namespace decmin
