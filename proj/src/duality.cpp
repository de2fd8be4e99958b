#include "decmin/duality.hpp"

#include <algorithm>
#include <functional>

#include "decmin/scan.hpp"

namespace decmin {

std::int64_t square_sum(const IntVector& z) {
  std::int64_t w = 0;
  for (auto v : z) w += v * v;
  return w;
}

std::int64_t difference_sum(const IntVector& z) {
  std::int64_t d = 0;
  for (std::size_t s = 0; s < z.size(); ++s)
    for (std::size_t t = 0; t < z.size(); ++t) d += std::abs(z[s] - z[t]);
  return d;
}

std::int64_t DiscreteConvexFunction::operator()(std::int64_t k) const {
  if (k < lo || k > hi())
    throw Error(ErrorKind::kPrecondition, "convex table does not cover " + std::to_string(k));
  return values[static_cast<std::size_t>(k - lo)];
}

bool DiscreteConvexFunction::convex() const {
  for (std::size_t i = 1; i + 1 < values.size(); ++i)
    if (2 * values[i] > values[i - 1] + values[i + 1]) return false;
  return true;
}

bool groenevelt_check(const SupermodularInstance& inst, const IntVector& m,
                      const std::vector<DiscreteConvexFunction>& phis) {
  const int n = inst.size();
  if (static_cast<int>(phis.size()) != n || static_cast<int>(m.size()) != n)
    throw Error(ErrorKind::kPrecondition, "one convex table per element required");
  for (const auto& phi : phis)
    if (!phi.convex()) throw Error(ErrorKind::kPrecondition, "NonConvexPhi: table is not convex");
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t || !exchange_feasible(inst, m, s, t)) continue;
      const std::int64_t before = phis[s](m[s]) + phis[t](m[t]);
      const std::int64_t after = phis[s](m[s] + 1) + phis[t](m[t] - 1);
      if (after < before) return false;
    }
  }
  return true;
}

std::int64_t dual_penalty(const IntVector& pi) {
  std::int64_t pen = 0;
  for (auto v : pi) pen += floor_div(v, 2) * ceil_div(v, 2);
  return pen;
}

std::int64_t dual_value(const SupermodularInstance& inst, const IntVector& pi) {
  return lovasz_extension(inst, pi).value() - dual_penalty(pi);
}

std::vector<Subset> strict_top_sets(const IntVector& pi) {
  IntVector levels = pi;
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Subset> out;
  for (auto alpha : levels) {
    Subset x;
    for (std::size_t s = 0; s < pi.size(); ++s)
      if (pi[s] >= alpha) x = x.with(static_cast<int>(s));
    out.push_back(x);
  }
  return out;
}

OptimalityCriteria check_optimality_criteria(const SupermodularInstance& inst, const IntVector& m,
                                             const IntVector& pi) {
  if (static_cast<int>(m.size()) != inst.size() || pi.size() != m.size())
    throw Error(ErrorKind::kPrecondition, "dimension mismatch");
  OptimalityCriteria c;
  c.o1 = true;
  for (std::size_t s = 0; s < m.size(); ++s)
    if (pi[s] < 2 * m[s] - 1 || pi[s] > 2 * m[s] + 1) c.o1 = false;
  c.o2 = true;
  for (Subset x : strict_top_sets(pi))
    if (!is_tight(inst, m, x)) c.o2 = false;
  return c;
}

DualCertificate make_dual_certificate(const SupermodularInstance& inst, const IntVector& m,
                                      const IntVector& pi) {
  DualCertificate cert;
  cert.pi = pi;
  cert.dual_value = dual_value(inst, pi);
  cert.is_odd = std::all_of(pi.begin(), pi.end(), [](std::int64_t v) { return v % 2 != 0; });
  cert.criteria = check_optimality_criteria(inst, m, pi);
  return cert;
}

IntVector canonical_dual(const CanonicalDecomposition& d) {
  std::size_t n = 0;
  for (Subset b : d.partition) n += static_cast<std::size_t>(b.size());
  IntVector pi(n, 0);
  for (int i = 0; i < d.q(); ++i)
    for (int s : d.partition[i].elements()) pi[s] = 2 * d.betas[i] - 1;
  return pi;
}

namespace {

// Members of the family { X subset of S_i : beta_i |X| = p_i(X) } lying inside F_i.
std::vector<Subset> fixed_family(const CanonicalDecomposition& d, int block, Subset fixed) {
  const Subset& si = d.partition[block];
  std::vector<Subset> family;
  const std::int64_t count = scan::subset_count(fixed);
  for (std::int64_t k = 0; k < count; ++k) {
    Subset x(deposit(k, fixed.mask));
    ExtInt p = d.block_instances[block](Subset(extract(x.mask, si.mask)));
    if (p.finite() && p.value() == d.betas[block] * x.size()) family.push_back(x);
  }
  return family;
}

}  // namespace

std::vector<std::pair<int, int>> dual_arcs(const CanonicalDecomposition& d, int block, Subset fixed) {
  const auto family = fixed_family(d, block, fixed);
  std::vector<std::pair<int, int>> arcs;
  for (int s : fixed.elements()) {
    for (int t : fixed.elements()) {
      if (s == t) continue;
      bool separated = std::any_of(family.begin(), family.end(),
                                   [&](Subset x) { return x.contains(t) && !x.contains(s); });
      if (!separated) arcs.emplace_back(s, t);
    }
  }
  return arcs;
}

bool is_dual_optimal(const SupermodularInstance& inst, const CanonicalDecomposition& d,
                     const std::vector<Subset>& fixed, const IntVector& pi) {
  if (static_cast<int>(pi.size()) != inst.size() || static_cast<int>(fixed.size()) != d.q())
    throw Error(ErrorKind::kPrecondition, "dimension mismatch");
  for (int i = 0; i < d.q(); ++i) {
    const std::int64_t odd = 2 * d.betas[i] - 1;
    for (int s : d.partition[i].elements()) {
      if (fixed[i].contains(s)) {
        if (pi[s] < odd || pi[s] > odd + 2) return false;
      } else if (pi[s] != odd) {
        return false;
      }
    }
    for (auto [s, t] : dual_arcs(d, i, fixed[i]))
      if (pi[s] < pi[t]) return false;
  }
  return true;
}

}  // namespace decmin
