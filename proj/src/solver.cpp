#include "decmin/solver.hpp"

#include <algorithm>
#include <functional>

#include "decmin/scan.hpp"

namespace decmin {

namespace {

DecOrder compare_sorted(IntVector x, IntVector y, bool decreasing) {
  if (x.size() != y.size()) throw Error(ErrorKind::kPrecondition, "dimension mismatch");
  if (decreasing) {
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
  } else {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
  }
  if (x < y) return DecOrder::kLess;
  if (y < x) return DecOrder::kGreater;
  return DecOrder::kEqual;
}

}  // namespace

DecOrder dec_compare(const IntVector& x, const IntVector& y) { return compare_sorted(x, y, true); }
DecOrder inc_compare(const IntVector& x, const IntVector& y) { return compare_sorted(x, y, false); }

bool is_near_uniform(const IntVector& m, Subset x) {
  if (x.empty()) return true;
  auto els = x.elements();
  auto [lo, hi] = std::minmax_element(els.begin(), els.end(), [&](int a, int b) { return m[a] < m[b]; });
  return m[*hi] - m[*lo] <= 1;
}

std::optional<ExchangePair> tightening_step(const SupermodularInstance& inst, const IntVector& m) {
  const int n = inst.size();
  if (static_cast<int>(m.size()) != n) throw Error(ErrorKind::kPrecondition, "dimension mismatch");
  std::vector<ExchangePair> candidates;
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      if (m[t] >= m[s] + 2) candidates.push_back({s, t});
  std::sort(candidates.begin(), candidates.end(), [&](const ExchangePair& a, const ExchangePair& b) {
    std::int64_t ga = m[a.t] - m[a.s], gb = m[b.t] - m[b.s];
    if (ga != gb) return ga > gb;
    if (a.t != b.t) return a.t < b.t;
    return a.s < b.s;
  });
  for (const auto& c : candidates)
    if (exchange_feasible(inst, m, c.s, c.t)) return c;
  return std::nullopt;
}

IntVector find_dec_min(const SupermodularInstance& inst, IntVector m0) {
  if (auto mem = is_member(inst, m0); !mem)
    throw Error(ErrorKind::kInfeasible, "starting vector is not a member (violated set " +
                                            inst.ground().format(*mem.witness) + ")");
  while (auto step = tightening_step(inst, m0)) m0 = unit_exchange(m0, step->s, step->t);
  return m0;
}

bool is_top_set(const IntVector& m, Subset x, Subset ground) {
  const Subset rest = ground - x;
  if (x.empty() || rest.empty()) return true;
  std::int64_t inside = m[x.elements().front()], outside = m[rest.elements().front()];
  for (int u : x.elements()) inside = std::min(inside, m[u]);
  for (int v : rest.elements()) outside = std::max(outside, m[v]);
  return inside >= outside;
}

namespace {

// Some m-tight m-top set strictly between lo and hi, if any (lowest mask).
std::optional<Subset> tight_top_between(const SupermodularInstance& inst, const IntVector& m,
                                        Subset lo, Subset hi) {
  const Subset free = hi - lo;
  const std::int64_t count = scan::subset_count(free);
  auto hit = scan::first_match(count, [&](std::int64_t k) {
    if (k == 0 || k == count - 1) return false;
    Subset x = Subset(deposit(k, free.mask)) | lo;
    return is_top_set(m, x, inst.full()) && is_tight(inst, m, x);
  });
  if (!hit) return std::nullopt;
  return Subset(deposit(*hit, free.mask)) | lo;
}

}  // namespace

DecMinWitness is_dec_min(const SupermodularInstance& inst, const IntVector& m) {
  if (!is_member(inst, m)) throw Error(ErrorKind::kPrecondition, "is_dec_min needs a member");
  if (auto pair = tightening_step(inst, m)) return {false, pair, {}};

  // Split non-near-uniform blocks with C' = C_{i-1} + T_m(block maxima).
  std::vector<Subset> chain{inst.full()};
  for (std::size_t i = 0; i < chain.size();) {
    Subset prev = i == 0 ? Subset() : chain[i - 1];
    Subset block = chain[i] - prev;
    if (is_near_uniform(m, block)) {
      ++i;
      continue;
    }
    std::int64_t top = m[block.elements().front()];
    for (int s : block.elements()) top = std::max(top, m[s]);
    Subset peak;
    for (int s : block.elements())
      if (m[s] == top) peak = peak.with(s);
    Subset split = smallest_tight_set(inst, m, prev | peak);
    if (split == chain[i] || !split.subset_of(chain[i]))
      throw Error(ErrorKind::kInfeasible, "chain construction stalled; is p supermodular?");
    chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(i), split);
  }

  // Refine to a maximal, hence longest, chain of m-tight m-top sets.
  for (std::size_t i = 0; i < chain.size();) {
    Subset prev = i == 0 ? Subset() : chain[i - 1];
    if (auto mid = tight_top_between(inst, m, prev, chain[i])) {
      chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(i), *mid);
    } else {
      ++i;
    }
  }
  return {true, std::nullopt, chain};
}

bool is_inc_max(const SupermodularInstance& inst, const IntVector& m) {
  const int n = inst.size();
  if (static_cast<int>(m.size()) != n) throw Error(ErrorKind::kPrecondition, "dimension mismatch");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m[a] < m[b]; });
  for (int s : order)
    for (int t = n - 1; t >= 0; --t)
      if (m[t] >= m[s] + 2 && exchange_feasible(inst, m, s, t)) return false;
  return true;
}

std::int64_t k_largest_sum(const IntVector& z, int k) {
  if (k < 1 || k > static_cast<int>(z.size()))
    throw Error(ErrorKind::kPrecondition, "k must lie in 1..n");
  IntVector sorted = z;
  std::partial_sort(sorted.begin(), sorted.begin() + k, sorted.end(), std::greater<>());
  std::int64_t sum = 0;
  for (int i = 0; i < k; ++i) sum += sorted[i];
  return sum;
}

bool valid_chain_certificate(const SupermodularInstance& inst, const IntVector& m,
                             const std::vector<Subset>& chain) {
  if (chain.empty() || chain.back() != inst.full()) return false;
  Subset prev;
  for (Subset c : chain) {
    if (c == prev || !prev.subset_of(c)) return false;
    if (!is_tight(inst, m, c) || !is_top_set(m, c, inst.full())) return false;
    if (!is_near_uniform(m, c - prev)) return false;
    prev = c;
  }
  return true;
}

}  // namespace decmin
