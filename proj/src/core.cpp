#include "decmin/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "decmin/scan.hpp"

namespace decmin {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::kParse, "ground set must be non-empty");
  if (names_.size() > static_cast<std::size_t>(kMaxGroundSize))
    throw Error(ErrorKind::kParse, "ground set larger than 64 elements");
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw Error(ErrorKind::kParse, "duplicate element label '" + names_[i] + "'");
  }
}

int GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw Error(ErrorKind::kParse, "unknown element '" + std::string(label) + "'");
  return it->second;
}

Subset GroundSet::subset_of(const std::vector<std::string>& labels) const {
  Subset x;
  for (const auto& l : labels) x = x.with(index_of(l));
  return x;
}

std::vector<std::string> GroundSet::labels(Subset x) const {
  std::vector<std::string> out;
  for (int i : x.elements()) out.push_back(names_.at(i));
  return out;
}

std::string GroundSet::format(Subset x) const {
  std::string out = "{";
  bool first = true;
  for (int i : x.elements()) {
    if (!first) out += ",";
    out += names_.at(i);
    first = false;
  }
  return out + "}";
}

GroundSet GroundSet::restricted_to(Subset x) const { return GroundSet(labels(x)); }

SupermodularInstance::SupermodularInstance(GroundSet ground, Oracle oracle, std::string source,
                                           int scan_limit)
    : ground_(std::make_shared<const GroundSet>(std::move(ground))),
      oracle_(std::make_shared<const Oracle>(std::move(oracle))),
      source_(std::move(source)),
      scan_limit_(scan_limit) {
  ExtInt ps = (*this)(full());
  if (!ps.finite()) throw Error(ErrorKind::kInfeasible, "p(S) must be finite");
  total_ = ps.value();
}

SupermodularInstance SupermodularInstance::with_scan_limit(int limit) const {
  SupermodularInstance copy = *this;
  copy.scan_limit_ = limit;
  return copy;
}

void SupermodularInstance::require_scannable(const char* op) const {
  if (size() > scan_limit_ || size() > 62)
    throw Error(ErrorKind::kScanTooLarge, std::string(op) + ": ground set of " +
                                              std::to_string(size()) + " exceeds scan limit " +
                                              std::to_string(scan_limit_));
}

SupermodularInstance table_instance(GroundSet ground, std::vector<ExtInt> table, std::string source) {
  const int n = ground.size();
  if (n > 30 || table.size() != (std::size_t{1} << n))
    throw Error(ErrorKind::kParse, "value table size does not match ground set");
  if (!(table[0] == ExtInt(0))) throw Error(ErrorKind::kInfeasible, "p(empty set) must be 0");
  auto shared = std::make_shared<const std::vector<ExtInt>>(std::move(table));
  return SupermodularInstance(
      std::move(ground), [shared](Subset x) { return (*shared)[x.mask]; }, std::move(source));
}

SupermodularInstance tabulate(const SupermodularInstance& inst) {
  inst.require_scannable("tabulate");
  const std::int64_t count = scan::subset_count(inst.full());
  std::vector<ExtInt> table(count);
#pragma omp parallel for schedule(static) if (count >= scan::kParallelThreshold)
  for (std::int64_t k = 0; k < count; ++k) table[k] = inst(Subset(k));
  return table_instance(inst.ground(), std::move(table), inst.source())
      .with_scan_limit(inst.scan_limit());
}

SupermodularInstance instance_from_points(GroundSet ground, const std::vector<IntVector>& points) {
  if (points.empty()) throw Error(ErrorKind::kInfeasible, "empty point set");
  const int n = ground.size();
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != n) throw Error(ErrorKind::kParse, "point dimension mismatch");
  std::vector<ExtInt> table(std::size_t{1} << n);
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::int64_t best = subset_sum(points.front(), Subset(k));
    for (const auto& pt : points) best = std::min(best, subset_sum(pt, Subset(k)));
    table[k] = best;
  }
  return table_instance(std::move(ground), std::move(table), "explicit");
}

namespace {

bool violates(ExtInt fx, ExtInt fy, ExtInt fi, ExtInt fu) {
  if (!fx.finite() || !fy.finite()) return false;
  if (!fi.finite() || !fu.finite()) return true;
  return fx.value() + fy.value() > fi.value() + fu.value();
}

constexpr int kExhaustiveAuditLimit = 12;
constexpr std::int64_t kAuditSamples = std::int64_t{1} << 20;

template <class FirstMatch>
std::optional<SupermodularViolation> audit_impl(const SupermodularInstance& inst, FirstMatch first) {
  inst.require_scannable("audit_supermodular");
  const int n = inst.size();
  const SupermodularInstance table = tabulate(inst);
  auto p = [&](Mask m) { return table(Subset(m)); };

  if (n <= kExhaustiveAuditLimit) {
    const Mask full = inst.full().mask;
    auto hit = first(std::int64_t{1} << (2 * n), [&](std::int64_t k) {
      Mask x = static_cast<Mask>(k) >> n, y = static_cast<Mask>(k) & full;
      return violates(p(x), p(y), p(x & y), p(x | y));
    });
    if (!hit) return std::nullopt;
    return SupermodularViolation{Subset(static_cast<Mask>(*hit) >> n),
                                 Subset(static_cast<Mask>(*hit) & full)};
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Mask> dist(0, inst.full().mask);
  std::vector<std::pair<Mask, Mask>> pairs(kAuditSamples);
  for (auto& pr : pairs) pr = {dist(rng), dist(rng)};
  auto hit = first(kAuditSamples, [&](std::int64_t k) {
    auto [x, y] = pairs[k];
    return violates(p(x), p(y), p(x & y), p(x | y));
  });
  if (!hit) return std::nullopt;
  return SupermodularViolation{Subset(pairs[*hit].first), Subset(pairs[*hit].second)};
}

}  // namespace

std::optional<SupermodularViolation> audit_supermodular(const SupermodularInstance& inst) {
  return audit_impl(inst, [](std::int64_t c, auto&& pred) { return scan::first_match(c, pred); });
}

std::optional<SupermodularViolation> audit_supermodular_serial(const SupermodularInstance& inst) {
  return audit_impl(inst,
                    [](std::int64_t c, auto&& pred) { return scan::serial::first_match(c, pred); });
}

ExtInt eval_p(const SupermodularInstance& inst, Subset x) {
  if (!x.subset_of(inst.full())) throw Error(ErrorKind::kPrecondition, "subset outside ground set");
  return inst(x);
}

ExtInt complement_b(const SupermodularInstance& inst, Subset x) {
  ExtInt rest = eval_p(inst, inst.full() - x);
  if (rest.is_neg_inf()) return ExtInt::pos_inf();
  return ExtInt(inst.total() - rest.value());
}

namespace {

void require_dimension(const SupermodularInstance& inst, const IntVector& z) {
  if (static_cast<int>(z.size()) != inst.size())
    throw Error(ErrorKind::kPrecondition, "vector dimension does not match ground set");
}

}  // namespace

Membership is_member(const SupermodularInstance& inst, const IntVector& z) {
  require_dimension(inst, z);
  inst.require_scannable("is_member");
  const Mask full = inst.full().mask;
  auto hit = scan::first_match(scan::subset_count(inst.full()), [&](std::int64_t k) {
    Subset x(static_cast<Mask>(k));
    ExtInt p = inst(x);
    if (!p.finite()) return false;
    std::int64_t zx = subset_sum(z, x);
    return x.mask == full ? zx != p.value() : zx < p.value();
  });
  if (!hit) return {true, std::nullopt};
  return {false, Subset(static_cast<Mask>(*hit))};
}

std::optional<std::vector<int>> finite_order(const SupermodularInstance& inst) {
  const int n = inst.size();
  std::vector<int> order;
  std::vector<char> dead(n <= 24 ? std::size_t{1} << n : 0, 0);
  auto rec = [&](auto&& self, Subset prefix) -> bool {
    if (prefix == inst.full()) return true;
    if (!dead.empty() && dead[prefix.mask]) return false;
    for (int s : (inst.full() - prefix).elements()) {
      if (!inst(prefix.with(s)).finite()) continue;
      order.push_back(s);
      if (self(self, prefix.with(s))) return true;
      order.pop_back();
    }
    if (!dead.empty()) dead[prefix.mask] = 1;
    return false;
  };
  if (!rec(rec, Subset())) return std::nullopt;
  return order;
}

IntVector greedy_vertex(const SupermodularInstance& inst, const std::vector<int>& order) {
  const int n = inst.size();
  std::vector<int> seen(order);
  std::sort(seen.begin(), seen.end());
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (seen != identity) throw Error(ErrorKind::kPrecondition, "order is not a permutation");

  IntVector m(n, 0);
  Subset prefix;
  std::int64_t prev = 0;
  for (int s : order) {
    prefix = prefix.with(s);
    ExtInt v = inst(prefix);
    if (!v.finite())
      throw Error(ErrorKind::kInfeasible, "infeasible prefix " + inst.ground().format(prefix));
    m[s] = v.value() - prev;
    prev = v.value();
  }
  return m;
}

ExtInt lovasz_extension_or_neg_inf(const SupermodularInstance& inst, const IntVector& pi) {
  const int n = inst.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pi[a] > pi[b]; });

  std::int64_t total = inst.total() * pi[order[n - 1]];
  Subset prefix;
  for (int j = 0; j + 1 < n; ++j) {
    prefix = prefix.with(order[j]);
    std::int64_t step = pi[order[j]] - pi[order[j + 1]];
    if (step == 0) continue;
    ExtInt v = inst(prefix);
    if (!v.finite()) return ExtInt::neg_inf();
    total += v.value() * step;
  }
  return total;
}

ExtInt lovasz_extension(const SupermodularInstance& inst, const IntVector& pi) {
  require_dimension(inst, pi);
  ExtInt v = lovasz_extension_or_neg_inf(inst, pi);
  if (!v.finite()) throw Error(ErrorKind::kInfeasible, "InfeasiblePrefix: p = -inf on a weighted prefix");
  return v;
}

bool is_tight(const SupermodularInstance& inst, const IntVector& m, Subset x) {
  ExtInt p = inst(x);
  return p.finite() && subset_sum(m, x) == p.value();
}

bool exchange_feasible(const SupermodularInstance& inst, const IntVector& m, int s, int t) {
  require_dimension(inst, m);
  if (s == t) throw Error(ErrorKind::kPrecondition, "exchange requires s != t");
  inst.require_scannable("exchange_feasible");
  // Infeasible iff some set containing t but not s is m-tight.
  const Subset free = inst.full().without(s).without(t);
  auto hit = scan::first_match(scan::subset_count(free), [&](std::int64_t k) {
    return is_tight(inst, m, Subset(deposit(k, free.mask)).with(t));
  });
  return !hit.has_value();
}

Subset smallest_tight_set(const SupermodularInstance& inst, const IntVector& m, Subset z) {
  require_dimension(inst, m);
  inst.require_scannable("smallest_tight_set");
  const Subset free = inst.full() - z;
  auto at = [&](std::int64_t k) { return Subset(deposit(k, free.mask)) | z; };
  return Subset(scan::and_reduce(
      scan::subset_count(free), [&](std::int64_t k) { return is_tight(inst, m, at(k)); },
      [&](std::int64_t k) { return at(k).mask; }, inst.full().mask));
}

SupermodularInstance restrict_to(const SupermodularInstance& inst, Subset z) {
  if (z.empty() || !z.subset_of(inst.full()))
    throw Error(ErrorKind::kPrecondition, "restriction needs a non-empty subset of the ground set");
  ExtInt pz = inst(z);
  if (!pz.finite()) throw Error(ErrorKind::kInfeasible, "p(Z) = -inf, cannot restrict");
  return SupermodularInstance(
      inst.ground().restricted_to(z),
      [inst, z](Subset x) { return inst(Subset(deposit(x.mask, z.mask))); },
      "restricted(" + inst.source() + ")", inst.scan_limit());
}

SupermodularInstance contract(const SupermodularInstance& inst, Subset z) {
  const Subset rest = inst.full() - z;
  if (rest.empty() || !z.subset_of(inst.full()))
    throw Error(ErrorKind::kPrecondition, "contraction must leave a non-empty ground set");
  ExtInt pz = inst(z);
  if (!pz.finite()) throw Error(ErrorKind::kInfeasible, "p(Z) = -inf, cannot contract");
  const std::int64_t base = pz.value();
  return SupermodularInstance(
      inst.ground().restricted_to(rest),
      [inst, z, rest, base](Subset x) -> ExtInt {
        ExtInt v = inst(Subset(deposit(x.mask, rest.mask)) | z);
        return v.finite() ? ExtInt(v.value() - base) : v;
      },
      "contracted(" + inst.source() + ")", inst.scan_limit());
}

namespace {

ExtInt box_sum(const std::vector<ExtInt>& v, Subset x) {
  ExtInt s = 0;
  for (int i : x.elements()) s = s + v[i];
  return s;
}

void require_box(const SupermodularInstance& inst, const Box& box) {
  if (static_cast<int>(box.lower.size()) != inst.size() ||
      static_cast<int>(box.upper.size()) != inst.size())
    throw Error(ErrorKind::kPrecondition, "box dimension does not match ground set");
  for (int i = 0; i < inst.size(); ++i) {
    if (box.lower[i].is_pos_inf() || box.upper[i].is_neg_inf() || box.upper[i] < box.lower[i])
      throw Error(ErrorKind::kPrecondition, "box needs lower <= upper");
  }
}

}  // namespace

bool box_intersect_feasible(const SupermodularInstance& inst, const Box& box) {
  require_box(inst, box);
  inst.require_scannable("box_intersect_feasible");
  auto hit = scan::first_match(scan::subset_count(inst.full()), [&](std::int64_t k) {
    Subset x(static_cast<Mask>(k));
    ExtInt p = inst(x);
    if (p.finite() && box_sum(box.upper, x) < p) return true;
    return complement_b(inst, x) < box_sum(box.lower, x);
  });
  return !hit.has_value();
}

SupermodularInstance box_truncate(const SupermodularInstance& inst, const Box& box) {
  require_box(inst, box);
  inst.require_scannable("box_truncate");
  if (!box_intersect_feasible(inst, box))
    throw Error(ErrorKind::kInfeasible, "box does not meet the base-polyhedron");
  const std::int64_t count = scan::subset_count(inst.full());
  return SupermodularInstance(
      inst.ground(),
      [inst, box, count](Subset x) -> ExtInt {
        auto best = scan::serial::max_value(count, [&](std::int64_t k) -> std::optional<std::int64_t> {
          Subset y(static_cast<Mask>(k));
          ExtInt term = inst(y);
          if (!term.finite()) return std::nullopt;
          ExtInt g = box_sum(box.upper, y - x), f = box_sum(box.lower, x - y);
          if (!g.finite() || !f.finite()) return std::nullopt;
          return term.value() - g.value() + f.value();
        });
        return best.found() ? ExtInt(best.value) : ExtInt::neg_inf();
      },
      "box(" + inst.source() + ")", inst.scan_limit());
}

}  // namespace decmin
