#include "decmin/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "decmin/scan.hpp"

namespace decmin {

namespace {

const Subset& block_set(const DecMinMatroid& dm, int block) {
  if (block < 0 || block >= dm.blocks()) throw Error(ErrorKind::kPrecondition, "no such block");
  return dm.decomposition.partition[block];
}

// p_i(X) - (beta_i - 1)|X| for X a global subset of S_i; nullopt at -inf.
std::optional<std::int64_t> reduced_value(const DecMinMatroid& dm, int block, Subset x) {
  const Subset& s = dm.decomposition.partition[block];
  ExtInt p = dm.decomposition.block_instances[block](Subset(extract(x.mask, s.mask)));
  if (!p.finite()) return std::nullopt;
  return p.value() - (dm.decomposition.betas[block] - 1) * x.size();
}

// Calls f on every subset of `universe` with exactly `size` elements, in mask order.
template <class F>
void for_each_sized_subset(Subset universe, int size, F&& f) {
  const std::int64_t count = scan::subset_count(universe);
  for (std::int64_t k = 0; k < count; ++k) {
    if (std::popcount(static_cast<Mask>(k)) != size) continue;
    if (!f(Subset(deposit(k, universe.mask)))) return;
  }
}

}  // namespace

DecMinMatroid build_dec_min_matroid(const SupermodularInstance& inst) {
  return build_dec_min_matroid(inst, canonical_decomposition(inst));
}

DecMinMatroid build_dec_min_matroid(const SupermodularInstance& inst, CanonicalDecomposition d) {
  DecMinMatroid dm;
  dm.decomposition = std::move(d);
  dm.delta_star.assign(inst.size(), 0);
  for (int i = 0; i < dm.blocks(); ++i)
    for (int s : dm.decomposition.partition[i].elements())
      dm.delta_star[s] = dm.decomposition.betas[i] - 1;
  for (int i = 0; i < dm.blocks(); ++i) dm.fixed.push_back(value_fixed(dm, i));
  return dm;
}

bool is_base_block(const DecMinMatroid& dm, int block, Subset l) {
  const Subset& s = block_set(dm, block);
  if (!l.subset_of(s) || l.size() != dm.decomposition.rs[block]) return false;
  auto hit = scan::first_match(scan::subset_count(s), [&](std::int64_t k) {
    Subset x(deposit(k, s.mask));
    auto need = reduced_value(dm, block, x);
    return need && (l & x).size() < *need;
  });
  return !hit.has_value();
}

std::vector<Subset> block_bases(const DecMinMatroid& dm, int block) {
  const Subset& s = block_set(dm, block);
  std::vector<Subset> out;
  for_each_sized_subset(s, static_cast<int>(dm.decomposition.rs[block]), [&](Subset l) {
    if (is_base_block(dm, block, l)) out.push_back(l);
    return true;
  });
  return out;
}

bool is_independent_block(const DecMinMatroid& dm, int block, Subset l) {
  const Subset& s = block_set(dm, block);
  const int rank = static_cast<int>(dm.decomposition.rs[block]);
  if (!l.subset_of(s) || l.size() > rank) return false;
  bool found = false;
  for_each_sized_subset(s - l, rank - l.size(), [&](Subset extra) {
    found = is_base_block(dm, block, l | extra);
    return !found;
  });
  return found;
}

Subset value_fixed(const DecMinMatroid& dm, int block) {
  const Subset& s = block_set(dm, block);
  return Subset(scan::or_reduce(
      scan::subset_count(s),
      [&](std::int64_t k) {
        if (k == 0) return false;
        Subset x(deposit(k, s.mask));
        auto v = reduced_value(dm, block, x);  // p_i(X) - (beta-1)|X|
        return v && *v == x.size();            // i.e. p_i(X) = beta |X|
      },
      [&](std::int64_t k) { return deposit(k, s.mask); }));
}

std::size_t count_dec_min(const DecMinMatroid& dm) {
  std::size_t total = 1;
  for (int i = 0; i < dm.blocks(); ++i) total *= block_bases(dm, i).size();
  return total;
}

std::vector<IntVector> enumerate_dec_min(const DecMinMatroid& dm, std::size_t budget) {
  std::vector<std::vector<Subset>> bases;
  std::size_t total = 1;
  for (int i = 0; i < dm.blocks(); ++i) {
    bases.push_back(block_bases(dm, i));
    total *= bases.back().size();
    if (total > budget)
      throw Error(ErrorKind::kBudgetExceeded,
                  "dec-min set exceeds the enumeration budget of " + std::to_string(budget));
  }
  std::vector<IntVector> out;
  out.reserve(total);
  std::vector<std::size_t> pick(dm.blocks(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    IntVector m = dm.delta_star;
    for (int i = 0; i < dm.blocks(); ++i)
      for (int s : bases[i][pick[i]].elements()) m[s] += 1;
    out.push_back(std::move(m));
    for (int i = dm.blocks() - 1; i >= 0; --i) {
      if (++pick[i] < bases[i].size()) break;
      pick[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational vector_cost(const IntVector& m, const std::vector<Rational>& cost) {
  if (m.size() != cost.size()) throw Error(ErrorKind::kPrecondition, "cost dimension mismatch");
  Rational total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += cost[i] * m[i];
  return total;
}

IntVector cheapest_dec_min(const DecMinMatroid& dm, const std::vector<Rational>& cost) {
  if (cost.size() != dm.delta_star.size())
    throw Error(ErrorKind::kPrecondition, "cost vector must cover every element");
  IntVector m = dm.delta_star;
  for (int i = 0; i < dm.blocks(); ++i) {
    std::vector<int> order = dm.decomposition.partition[i].elements();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cost[a] < cost[b]; });
    Subset chosen;
    const int rank = static_cast<int>(dm.decomposition.rs[i]);
    for (int s : order) {
      if (chosen.size() == rank) break;
      if (is_independent_block(dm, i, chosen.with(s))) chosen = chosen.with(s);
    }
    for (int s : chosen.elements()) m[s] += 1;
  }
  return m;
}

}  // namespace decmin
