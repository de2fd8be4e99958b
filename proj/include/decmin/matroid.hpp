#pragma once

// The dec-min elements as a translated matroid base set: m = chi_L + delta*,
// with L a basis of the direct sum of the block matroids M_i.

#include <boost/rational.hpp>
#include <cstddef>
#include <vector>

#include "decmin/canonical.hpp"

namespace decmin {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kDecMinEnumerationBudget = 100000;

struct DecMinMatroid {
  CanonicalDecomposition decomposition;
  IntVector delta_star;        // beta_i - 1 on S_i
  std::vector<Subset> fixed;   // F_i, the value-fixed elements of block i

  int blocks() const { return decomposition.q(); }
};

DecMinMatroid build_dec_min_matroid(const SupermodularInstance& inst);
DecMinMatroid build_dec_min_matroid(const SupermodularInstance& inst, CanonicalDecomposition d);

/// Is L (a subset of S_i, global indices) a basis of M_i?
bool is_base_block(const DecMinMatroid& dm, int block, Subset l);

/// All bases of M_i in increasing mask order.
std::vector<Subset> block_bases(const DecMinMatroid& dm, int block);

/// Is L contained in some basis of M_i?
bool is_independent_block(const DecMinMatroid& dm, int block, Subset l);

/// F_i: union of all X in S_i with beta_i |X| = p_i(X).
Subset value_fixed(const DecMinMatroid& dm, int block);

/// All dec-min elements, sorted lexicographically. Throws kBudgetExceeded
/// above `budget` elements.
std::vector<IntVector> enumerate_dec_min(const DecMinMatroid& dm,
                                         std::size_t budget = kDecMinEnumerationBudget);

/// Number of dec-min elements (product of the block basis counts).
std::size_t count_dec_min(const DecMinMatroid& dm);

/// Matroid greedy per block: ascending cost, then ascending index.
IntVector cheapest_dec_min(const DecMinMatroid& dm, const std::vector<Rational>& cost);

Rational vector_cost(const IntVector& m, const std::vector<Rational>& cost);

}  // namespace decmin
