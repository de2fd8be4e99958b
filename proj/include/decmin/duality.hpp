#pragma once

// Square-sum minimization over an M-convex set and its integral min-max
// certificate:  min sum m(s)^2  =  max_pi  p^(pi) - sum floor(pi/2) ceil(pi/2).

#include <utility>
#include <vector>

#include "decmin/canonical.hpp"

namespace decmin {

std::int64_t square_sum(const IntVector& z);
/// Sum over ordered pairs s != t of |z(s) - z(t)|.
std::int64_t difference_sum(const IntVector& z);

/// Univariate discrete function tabulated on [lo, lo + values.size()).
struct DiscreteConvexFunction {
  std::int64_t lo = 0;
  std::vector<std::int64_t> values;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  std::int64_t operator()(std::int64_t k) const;  // kPrecondition outside the table
  bool convex() const;
};

/// Local optimality of sum phi_s(m(s)) under all feasible unit exchanges.
/// Throws kPrecondition (NonConvexPhi) on a non-convex table.
bool groenevelt_check(const SupermodularInstance& inst, const IntVector& m,
                      const std::vector<DiscreteConvexFunction>& phis);

/// sum floor(pi(s)/2) ceil(pi(s)/2)
std::int64_t dual_penalty(const IntVector& pi);

std::int64_t dual_value(const SupermodularInstance& inst, const IntVector& pi);

struct OptimalityCriteria {
  bool o1 = false;  // 2m(s) - 1 <= pi(s) <= 2m(s) + 1 for all s
  bool o2 = false;  // every strict pi-top set is m-tight
};

/// Strict pi-top sets { s : pi(s) >= alpha }, one per distinct value, growing.
std::vector<Subset> strict_top_sets(const IntVector& pi);

OptimalityCriteria check_optimality_criteria(const SupermodularInstance& inst, const IntVector& m,
                                             const IntVector& pi);

struct DualCertificate {
  IntVector pi;
  std::int64_t dual_value = 0;
  bool is_odd = false;
  OptimalityCriteria criteria;
};

DualCertificate make_dual_certificate(const SupermodularInstance& inst, const IntVector& m,
                                      const IntVector& pi);

/// pi*(s) = 2 beta_i - 1 on S_i.
IntVector canonical_dual(const CanonicalDecomposition& d);

/// Arcs (s,t) of the digraph on F_i: no X in F_i-family contains t but not s.
std::vector<std::pair<int, int>> dual_arcs(const CanonicalDecomposition& d, int block, Subset fixed);

bool is_dual_optimal(const SupermodularInstance& inst, const CanonicalDecomposition& d,
                     const std::vector<Subset>& fixed, const IntVector& pi);

}  // namespace decmin
