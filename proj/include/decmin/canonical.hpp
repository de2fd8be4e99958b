#pragma once

// Essential value-sequence, peak sets and the canonical chain/partition.

#include <vector>

#include "decmin/core.hpp"

namespace decmin {

struct CanonicalDecomposition {
  std::vector<Subset> chain;       // C_1 < ... < C_q = S
  std::vector<Subset> partition;   // S_i = C_i - C_{i-1}
  std::vector<std::int64_t> betas; // strictly decreasing
  std::vector<std::int64_t> rs;    // number of beta_i-valued components, 0 < r_i <= |S_i|
  // p_i on S_i: p_i(X) = p(C_{i-1} + X) - p(C_{i-1}).
  std::vector<SupermodularInstance> block_instances;

  int q() const { return static_cast<int>(chain.size()); }

  // Structural equality: chain, betas, rs.
  bool same_as(const CanonicalDecomposition& other) const {
    return chain == other.chain && betas == other.betas && rs == other.rs;
  }
};

/// max over non-empty X of ceil(p(X) / |X|).
std::int64_t beta_first(const SupermodularInstance& inst);

struct PeakSet {
  Subset set;       // smallest maximizer of p(X) - (beta_1 - 1)|X|
  std::int64_t r = 0;  // the maximum value
};

PeakSet peak_set(const SupermodularInstance& inst);

/// Iterated peak sets on p / C_{j-1}.
CanonicalDecomposition canonical_decomposition(const SupermodularInstance& inst);

/// Recovers the decomposition from any dec-min m; throws kPrecondition
/// when m is not dec-min.
CanonicalDecomposition decomposition_from_decmin(const SupermodularInstance& inst, const IntVector& m);

/// m is dec-min iff it is a member, every C_i is m-tight and
/// beta_i - 1 <= m(s) <= beta_i on S_i.
bool verify_decmin_via_canonical(const SupermodularInstance& inst, const CanonicalDecomposition& d,
                                 const IntVector& m);

}  // namespace decmin
