#pragma once

// Supermodular set-function instances and the base-polyhedron machinery
// built on exhaustive subset scans.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decmin/types.hpp"

namespace decmin {

/// Integer set function p with p(empty) = 0 and finite p(S), given as an
/// oracle. Describes the base-polyhedron B'(p) = { x : x(S) = p(S), x(X) >= p(X) }.
/// Instances are immutable and cheap to copy.
class SupermodularInstance {
 public:
  using Oracle = std::function<ExtInt(Subset)>;

  SupermodularInstance(GroundSet ground, Oracle oracle, std::string source,
                       int scan_limit = kDefaultScanLimit);

  const GroundSet& ground() const { return *ground_; }
  int size() const { return ground_->size(); }
  Subset full() const { return ground_->full(); }
  const std::string& source() const { return source_; }
  int scan_limit() const { return scan_limit_; }

  ExtInt operator()(Subset x) const { return x.empty() ? ExtInt(0) : (*oracle_)(x); }
  std::int64_t total() const { return total_; }  // p(S)

  SupermodularInstance with_scan_limit(int limit) const;

  // Throws kScanTooLarge when n exceeds the scan limit.
  void require_scannable(const char* op) const;

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::shared_ptr<const Oracle> oracle_;
  std::string source_;
  int scan_limit_;
  std::int64_t total_ = 0;
};

/// Explicit value table indexed by mask; missing entries are -inf.
SupermodularInstance table_instance(GroundSet ground, std::vector<ExtInt> table,
                                    std::string source = "explicit");

/// Tabulates any instance (2^n oracle calls).
SupermodularInstance tabulate(const SupermodularInstance& inst);

/// The tight lower function of a finite point set: p(X) = min over points of x(X).
/// When the points form an M-convex set, its integer points are exactly them.
SupermodularInstance instance_from_points(GroundSet ground, const std::vector<IntVector>& points);

struct SupermodularViolation {
  Subset x, y;
};

// Exhaustive for n <= 12, otherwise a fixed-seed sample of pairs.
std::optional<SupermodularViolation> audit_supermodular(const SupermodularInstance& inst);
std::optional<SupermodularViolation> audit_supermodular_serial(const SupermodularInstance& inst);

ExtInt eval_p(const SupermodularInstance& inst, Subset x);

/// b(X) = p(S) - p(S - X); +inf when p(S - X) = -inf.
ExtInt complement_b(const SupermodularInstance& inst, Subset x);

struct Membership {
  bool member = false;
  std::optional<Subset> witness;  // lowest-mask violated constraint
  explicit operator bool() const { return member; }
};

Membership is_member(const SupermodularInstance& inst, const IntVector& z);

/// Vertex of B'(p) from prefix differences along `order`.
IntVector greedy_vertex(const SupermodularInstance& inst, const std::vector<int>& order);

/// An order whose prefixes all have finite p, preferring smaller indices;
/// nullopt when no such maximal chain exists.
std::optional<std::vector<int>> finite_order(const SupermodularInstance& inst);

/// Linear (Lovasz) extension of p at pi. Throws kInfeasible when a prefix
/// with positive weight has p = -inf.
ExtInt lovasz_extension(const SupermodularInstance& inst, const IntVector& pi);
/// Same, but returns -inf instead of throwing; safe inside parallel scans.
ExtInt lovasz_extension_or_neg_inf(const SupermodularInstance& inst, const IntVector& pi);

/// Is m + chi_s - chi_t still a member? Requires m to be a member, s != t.
bool exchange_feasible(const SupermodularInstance& inst, const IntVector& m, int s, int t);

/// Smallest m-tight set containing z.
Subset smallest_tight_set(const SupermodularInstance& inst, const IntVector& m, Subset z);

bool is_tight(const SupermodularInstance& inst, const IntVector& m, Subset x);

/// p restricted to Z: ground set Z.
SupermodularInstance restrict_to(const SupermodularInstance& inst, Subset z);
/// p/Z: ground set S - Z, p'(X) = p(X + Z) - p(Z).
SupermodularInstance contract(const SupermodularInstance& inst, Subset z);

/// Componentwise box bounds; lower entries may be -inf, upper +inf.
struct Box {
  std::vector<ExtInt> lower, upper;
};

/// Is B'(p) intersect [f, g] non-empty?
bool box_intersect_feasible(const SupermodularInstance& inst, const Box& box);

/// B'(p) intersect [f, g] as a base-polyhedron B'(p'), with
/// p'(X) = max_Y { p(Y) - g(Y - X) + f(X - Y) }. Requires a feasible box.
SupermodularInstance box_truncate(const SupermodularInstance& inst, const Box& box);

}  // namespace decmin
