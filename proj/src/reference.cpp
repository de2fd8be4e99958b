#include "decmin/reference.hpp"

#include <algorithm>

#include "decmin/duality.hpp"
#include "decmin/scan.hpp"
#include "decmin/solver.hpp"

namespace decmin {

std::optional<EnumerationBudget> natural_bounds(const SupermodularInstance& inst) {
  EnumerationBudget b;
  for (int s = 0; s < inst.size(); ++s) {
    ExtInt lo = inst(Subset::single(s));
    ExtInt hi = complement_b(inst, Subset::single(s));
    if (!lo.finite() || !hi.finite()) return std::nullopt;
    b.lower.push_back(lo.value());
    b.upper.push_back(hi.value());
  }
  return b;
}

namespace {

void check_box(const SupermodularInstance& inst, const EnumerationBudget& budget) {
  const auto n = static_cast<std::size_t>(inst.size());
  if (budget.lower.size() != n || budget.upper.size() != n)
    throw Error(ErrorKind::kPrecondition, "bounds dimension does not match ground set");
  long double points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (budget.upper[i] < budget.lower[i]) return;  // empty box
    points *= static_cast<long double>(budget.upper[i] - budget.lower[i] + 1);
  }
  if (points > static_cast<long double>(budget.max_points))
    throw Error(ErrorKind::kBudgetExceeded, "enumeration box holds more than " +
                                                std::to_string(budget.max_points) + " points");
}

// Box points whose component sum is p(S), lexicographic.
std::vector<IntVector> sum_candidates(const SupermodularInstance& inst, const EnumerationBudget& b) {
  const int n = inst.size();
  std::vector<IntVector> out;
  for (int i = 0; i < n; ++i)
    if (b.upper[i] < b.lower[i]) return out;
  // Suffix sums of the bounds prune branches that cannot reach p(S).
  IntVector lo_tail(n + 1, 0), hi_tail(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    lo_tail[i] = lo_tail[i + 1] + b.lower[i];
    hi_tail[i] = hi_tail[i + 1] + b.upper[i];
  }
  IntVector z(n);
  auto rec = [&](auto&& self, int i, std::int64_t remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(z);
      return;
    }
    for (std::int64_t v = b.lower[i]; v <= b.upper[i]; ++v) {
      const std::int64_t left = remaining - v;
      if (left < lo_tail[i + 1] || left > hi_tail[i + 1]) continue;
      z[i] = v;
      self(self, i + 1, left);
    }
  };
  rec(rec, 0, inst.total());
  return out;
}

std::vector<IntVector> keep_members(const SupermodularInstance& inst, std::vector<IntVector> cand,
                                    bool parallel) {
  std::vector<char> keep(cand.size(), 0);
  const auto count = static_cast<std::int64_t>(cand.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel && count >= 256)
  for (std::int64_t k = 0; k < count; ++k) keep[k] = is_member(inst, cand[k]).member ? 1 : 0;
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < cand.size(); ++k)
    if (keep[k]) out.push_back(std::move(cand[k]));
  return out;
}

}  // namespace

std::vector<IntVector> enumerate_members(const SupermodularInstance& inst,
                                         const EnumerationBudget& budget) {
  check_box(inst, budget);
  inst.require_scannable("enumerate_members");
  return keep_members(inst, sum_candidates(inst, budget), true);
}

std::vector<IntVector> enumerate_members_serial(const SupermodularInstance& inst,
                                                const EnumerationBudget& budget) {
  check_box(inst, budget);
  inst.require_scannable("enumerate_members");
  return keep_members(inst, sum_candidates(inst, budget), false);
}

namespace {

template <class Compare>
std::vector<IntVector> best_class(const std::vector<IntVector>& points, Compare cmp, DecOrder want) {
  if (points.empty()) return {};
  const IntVector* best = &points.front();
  for (const auto& p : points)
    if (cmp(p, *best) == want) best = &p;
  std::vector<IntVector> out;
  for (const auto& p : points)
    if (cmp(p, *best) == DecOrder::kEqual) out.push_back(p);
  return out;
}

}  // namespace

std::vector<IntVector> dec_min_of(const std::vector<IntVector>& points) {
  return best_class(points, dec_compare, DecOrder::kLess);
}

std::vector<IntVector> inc_max_of(const std::vector<IntVector>& points) {
  return best_class(points, inc_compare, DecOrder::kGreater);
}

std::pair<std::int64_t, std::vector<IntVector>> min_square_sum_of(const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorKind::kInfeasible, "no points");
  std::int64_t best = square_sum(points.front());
  for (const auto& p : points) best = std::min(best, square_sum(p));
  std::vector<IntVector> arg;
  for (const auto& p : points)
    if (square_sum(p) == best) arg.push_back(p);
  return {best, arg};
}

std::vector<IntVector> brute_dec_min(const SupermodularInstance& inst, const EnumerationBudget& budget) {
  return dec_min_of(enumerate_members(inst, budget));
}

std::vector<IntVector> brute_inc_max(const SupermodularInstance& inst, const EnumerationBudget& budget) {
  return inc_max_of(enumerate_members(inst, budget));
}

std::pair<std::int64_t, std::vector<IntVector>> brute_min_sqsum(const SupermodularInstance& inst,
                                                                const EnumerationBudget& budget) {
  return min_square_sum_of(enumerate_members(inst, budget));
}

DualGrid uniform_grid(int n, const IntVector& values) {
  return DualGrid{std::vector<IntVector>(static_cast<std::size_t>(n), values)};
}

std::pair<std::int64_t, IntVector> brute_dual_max(const SupermodularInstance& inst, const DualGrid& grid) {
  const int n = inst.size();
  if (static_cast<int>(grid.candidates.size()) != n)
    throw Error(ErrorKind::kPrecondition, "grid dimension does not match ground set");
  long double points = 1;
  for (const auto& c : grid.candidates) {
    if (c.empty()) throw Error(ErrorKind::kPrecondition, "empty candidate list");
    points *= static_cast<long double>(c.size());
  }
  if (points > static_cast<long double>(grid.max_points))
    throw Error(ErrorKind::kBudgetExceeded, "dual grid too large");

  // Mixed radix, first coordinate most significant: index order = lexicographic order.
  auto decode = [&](std::int64_t k) {
    IntVector pi(n);
    for (int s = n - 1; s >= 0; --s) {
      const auto radix = static_cast<std::int64_t>(grid.candidates[s].size());
      pi[s] = grid.candidates[s][static_cast<std::size_t>(k % radix)];
      k /= radix;
    }
    return pi;
  };
  auto best = scan::max_value(static_cast<std::int64_t>(points),
                              [&](std::int64_t k) -> std::optional<std::int64_t> {
                                ExtInt ext = lovasz_extension_or_neg_inf(inst, decode(k));
                                if (!ext.finite()) return std::nullopt;
                                return ext.value() - dual_penalty(decode(k));
                              });
  if (!best.found()) throw Error(ErrorKind::kInfeasible, "every grid point hits an infeasible prefix");
  return {best.value, decode(best.index)};
}

}  // namespace decmin
