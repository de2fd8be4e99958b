#include "decmin/canonical.hpp"

#include "decmin/scan.hpp"
#include "decmin/solver.hpp"

namespace decmin {

std::int64_t beta_first(const SupermodularInstance& inst) {
  inst.require_scannable("beta_first");
  auto best = scan::max_value(scan::subset_count(inst.full()),
                              [&](std::int64_t k) -> std::optional<std::int64_t> {
                                if (k == 0) return std::nullopt;
                                Subset x(static_cast<Mask>(k));
                                ExtInt p = inst(x);
                                if (!p.finite()) return std::nullopt;
                                return ceil_div(p.value(), x.size());
                              });
  // X = S is always finite, so something was found.
  return best.value;
}

PeakSet peak_set(const SupermodularInstance& inst) {
  const std::int64_t beta = beta_first(inst);
  const std::int64_t count = scan::subset_count(inst.full());
  auto h = [&](std::int64_t k) -> std::optional<std::int64_t> {
    Subset x(static_cast<Mask>(k));
    ExtInt p = inst(x);
    if (!p.finite()) return std::nullopt;
    return p.value() - (beta - 1) * x.size();
  };
  auto best = scan::max_value(count, h);
  Mask smallest = scan::and_reduce(
      count,
      [&](std::int64_t k) {
        auto v = h(k);
        return v && *v == best.value;
      },
      [](std::int64_t k) { return static_cast<Mask>(k); }, inst.full().mask);
  return {Subset(smallest), best.value};
}

namespace {

SupermodularInstance block_instance(const SupermodularInstance& inst, Subset prev, Subset block) {
  if (prev.empty()) return block == inst.full() ? inst : restrict_to(inst, block);
  SupermodularInstance contracted = contract(inst, prev);
  const Subset rest = inst.full() - prev;
  const Subset local(extract(block.mask, rest.mask));
  return local == contracted.full() ? contracted : restrict_to(contracted, local);
}

void fill_block(CanonicalDecomposition& d, const SupermodularInstance& inst, Subset prev,
                Subset next, std::int64_t beta) {
  const Subset block = next - prev;
  d.chain.push_back(next);
  d.partition.push_back(block);
  d.betas.push_back(beta);
  d.rs.push_back(inst(next).value() - inst(prev).value() - (beta - 1) * block.size());
  d.block_instances.push_back(block_instance(inst, prev, block));
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const SupermodularInstance& inst) {
  inst.require_scannable("canonical_decomposition");
  CanonicalDecomposition d;
  Subset prev;
  while (prev != inst.full()) {
    SupermodularInstance rest = prev.empty() ? inst : contract(inst, prev);
    const Subset rest_mask = inst.full() - prev;
    const std::int64_t beta = beta_first(rest);
    const PeakSet peak = peak_set(rest);
    if (!d.betas.empty() && beta >= d.betas.back())
      throw Error(ErrorKind::kInfeasible, "essential values not decreasing; is p supermodular?");
    const Subset next = prev | Subset(deposit(peak.set.mask, rest_mask.mask));
    fill_block(d, inst, prev, next, beta);
    if (d.rs.back() != peak.r || peak.r <= 0 || peak.r > (next - prev).size())
      throw Error(ErrorKind::kInfeasible, "peak value out of range; is p supermodular?");
    prev = next;
  }
  return d;
}

CanonicalDecomposition decomposition_from_decmin(const SupermodularInstance& inst, const IntVector& m) {
  if (!is_member(inst, m)) throw Error(ErrorKind::kPrecondition, "vector is not a member");
  if (!is_dec_min(inst, m).dec_min) throw Error(ErrorKind::kPrecondition, "vector is not dec-min");
  CanonicalDecomposition d;
  Subset prev;
  while (prev != inst.full()) {
    const Subset rest = inst.full() - prev;
    std::int64_t beta = m[rest.elements().front()];
    for (int s : rest.elements()) beta = std::max(beta, m[s]);
    Subset level;
    for (int s : rest.elements())
      if (m[s] == beta) level = level.with(s);
    const Subset next = smallest_tight_set(inst, m, prev | level);
    fill_block(d, inst, prev, next, beta);
    prev = next;
  }
  return d;
}

bool verify_decmin_via_canonical(const SupermodularInstance& inst, const CanonicalDecomposition& d,
                                 const IntVector& m) {
  if (static_cast<int>(m.size()) != inst.size()) return false;
  for (int i = 0; i < d.q(); ++i) {
    if (!is_tight(inst, m, d.chain[i])) return false;
    for (int s : d.partition[i].elements())
      if (m[s] < d.betas[i] - 1 || m[s] > d.betas[i]) return false;
  }
  return static_cast<bool>(is_member(inst, m));
}

}  // namespace decmin
