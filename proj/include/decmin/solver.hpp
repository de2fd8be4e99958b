#pragma once

// Decreasing-order comparison, 1-tightening local search and dec-min
// certificates over the integer points of a base-polyhedron.

#include <optional>
#include <vector>

#include "decmin/core.hpp"

namespace decmin {

enum class DecOrder { kLess, kEqual, kGreater };

/// Compares x and y sorted decreasingly; kEqual means value-equivalent.
DecOrder dec_compare(const IntVector& x, const IntVector& y);

/// Compares x and y sorted increasingly; kGreater means x is increasingly larger.
DecOrder inc_compare(const IntVector& x, const IntVector& y);

bool is_near_uniform(const IntVector& m, Subset x);

struct ExchangePair {
  int s = -1;  // gains one unit
  int t = -1;  // loses one unit, m(t) >= m(s) + 2
  friend bool operator==(const ExchangePair&, const ExchangePair&) = default;
};

/// A 1-tightening step for m, chosen by largest gap m(t) - m(s), then
/// smallest t, then smallest s.
std::optional<ExchangePair> tightening_step(const SupermodularInstance& inst, const IntVector& m);

/// Local search from a member m0 until no tightening step exists.
IntVector find_dec_min(const SupermodularInstance& inst, IntVector m0);

struct DecMinWitness {
  bool dec_min = false;
  std::optional<ExchangePair> improving_pair;  // set iff !dec_min
  std::vector<Subset> chain;                   // C_1 < ... < C_k = S, set iff dec_min
};

/// Either an improving pair or a longest chain of m-tight m-top sets on whose
/// difference blocks m is near-uniform.
DecMinWitness is_dec_min(const SupermodularInstance& inst, const IntVector& m);

/// Inc-max test. Shares the no-improving-pair condition with is_dec_min but
/// scans pairs in its own order (smallest m(s) first).
bool is_inc_max(const SupermodularInstance& inst, const IntVector& m);

/// Sum of the k largest components, 1 <= k <= n.
std::int64_t k_largest_sum(const IntVector& z, int k);

bool is_top_set(const IntVector& m, Subset x, Subset ground);

/// Checks a chain certificate: strictly increasing, ends at S, every member
/// m-tight and m-top, m near-uniform on every difference block.
bool valid_chain_certificate(const SupermodularInstance& inst, const IntVector& m,
                             const std::vector<Subset>& chain);

}  // namespace decmin
