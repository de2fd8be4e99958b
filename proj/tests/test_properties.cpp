// Invariants checked over the seeded random corpus.

#include <map>
#include <random>

#include "corpus.hpp"
#include "decmin/canonical.hpp"
#include "decmin/duality.hpp"
#include "decmin/matroid.hpp"
#include "decmin/reference.hpp"
#include "decmin/solver.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "printing.hpp"

using namespace decmin;

namespace {

const std::vector<corpus::Entry>& entries() {
  static const auto all = corpus::build();
  return all;
}

// Every third entry keeps the heavier checks quick.
template <class F>
void for_sample(F&& f, int stride = 3) {
  const auto& all = entries();
  for (std::size_t i = 0; i < all.size(); i += stride) {
    CAPTURE(all[i].label);
    f(all[i]);
  }
}

IntVector indicator(Subset z, int n) {
  IntVector v(n);
  for (int i = 0; i < n; ++i) v[i] = z.contains(i);
  return v;
}

}  // namespace

TEST_CASE("corpus size and member sets") {
  CHECK(entries().size() >= 200);
  for (const auto& e : entries()) {
    CAPTURE(e.label);
    CHECK(e.inst.size() <= 6);
    const auto got = enumerate_members(e.inst, e.bounds);
    CHECK(got == oracle::sorted(e.members));
    CHECK(got == enumerate_members_serial(e.inst, e.bounds));
  }
}

TEST_CASE("supermodularity audit passes") {
  for (const auto& e : entries()) {
    CAPTURE(e.label);
    CHECK_FALSE(audit_supermodular(e.inst).has_value());
    CHECK_FALSE(audit_supermodular_serial(e.inst).has_value());
  }
}

TEST_CASE("greedy vertices are members") {
  std::mt19937_64 rng(3);
  for_sample([&](const corpus::Entry& e) {
    std::vector<int> order(e.inst.size());
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < 5; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(e.members.count(greedy_vertex(e.inst, order)) == 1);
    }
  }, 1);
}

TEST_CASE("linear extension at indicators and the greedy bound") {
  std::mt19937_64 rng(4);
  for_sample([&](const corpus::Entry& e) {
    const int n = e.inst.size();
    for (Mask z = 0; z < (Mask{1} << n); ++z)
      CHECK(lovasz_extension(e.inst, indicator(Subset(z), n)) == e.inst(Subset(z)));
    std::uniform_int_distribution<std::int64_t> d(-6, 6);
    for (int k = 0; k < 10; ++k) {
      IntVector pi(n);
      for (auto& x : pi) x = d(rng);
      const auto bound = lovasz_extension(e.inst, pi).value();
      std::int64_t low = std::numeric_limits<std::int64_t>::max();
      for (const auto& z : e.members) {
        std::int64_t v = 0;
        for (int i = 0; i < n; ++i) v += pi[i] * z[i];
        CHECK(v >= bound);
        low = std::min(low, v);
      }
      CHECK(low == bound);
    }
  });
}

TEST_CASE("exchanges and smallest tight sets") {
  for_sample([&](const corpus::Entry& e) {
    const int n = e.inst.size();
    for (const auto& m : e.members) {
      for (int z = 0; z < n; ++z) {
        Subset expect = Subset::single(z);
        for (int t = 0; t < n; ++t) {
          if (t == z) continue;
          const bool direct = e.members.count(unit_exchange(m, t, z)) == 1;
          CHECK(exchange_feasible(e.inst, m, t, z) == direct);
          if (e.members.count(unit_exchange(m, t, z))) expect = expect.with(t);
        }
        CHECK(smallest_tight_set(e.inst, m, Subset::single(z)) == expect);
      }
    }
  });
}

TEST_CASE("contraction composes") {
  for_sample([&](const corpus::Entry& e) {
    const int n = e.inst.size();
    const Mask full = (Mask{1} << n) - 1;
    for (Mask z1 = 1; z1 < full; z1 += 3) {
      const auto c1 = contract(e.inst, Subset(z1));
      const Mask rest = full & ~z1;
      for (Mask k2 = 1; k2 < (Mask{1} << c1.size()) - 1; ++k2) {
        const Mask z2 = deposit(k2, rest);
        const auto twice = contract(c1, Subset(k2));
        const auto once = contract(e.inst, Subset(z1 | z2));
        REQUIRE(twice.size() == once.size());
        for (Mask x = 0; x < (Mask{1} << once.size()); ++x) CHECK(twice(Subset(x)) == once(Subset(x)));
      }
    }
  });
}

TEST_CASE("dec_compare is a total quasi-order") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> d(-2, 3);
  auto random_vec = [&] {
    IntVector v(4);
    for (auto& x : v) x = d(rng);
    return v;
  };
  auto le = [](const IntVector& a, const IntVector& b) { return dec_compare(a, b) != DecOrder::kGreater; };
  for (int trial = 0; trial < 3000; ++trial) {
    const auto a = random_vec(), b = random_vec(), c = random_vec();
    CHECK((le(a, b) || le(b, a)));
    if (le(a, b) && le(b, c)) CHECK(le(a, c));
    CHECK((dec_compare(a, b) == DecOrder::kEqual) == (oracle::decreasing(a) == oracle::decreasing(b)));
    CHECK((dec_compare(a, b) == DecOrder::kLess) == (oracle::decreasing(a) < oracle::decreasing(b)));
  }
}

TEST_CASE("local search steps") {
  for_sample([&](const corpus::Entry& e) {
    for (const auto& m : e.members) {
      const auto step = tightening_step(e.inst, m);
      if (!step) continue;
      const auto next = unit_exchange(m, step->s, step->t);
      CHECK(m[step->t] >= m[step->s] + 2);
      CHECK(e.members.count(next) == 1);
      CHECK(square_sum(next) <= square_sum(m) - 2);
    }
    const auto m = find_dec_min(e.inst, *e.members.rbegin());
    CHECK(oracle::dec_min(e.members).count(m) == 1);
  }, 1);
}

TEST_CASE("solver verdicts agree with brute force") {
  for (const auto& e : entries()) {
    CAPTURE(e.label);
    const auto dec = oracle::dec_min(e.members);
    const int n = e.inst.size();
    for (const auto& m : e.members) {
      const auto w = is_dec_min(e.inst, m);
      CHECK(w.dec_min == (dec.count(m) == 1));
      CHECK(is_inc_max(e.inst, m) == w.dec_min);
      if (w.dec_min) {
        CHECK(valid_chain_certificate(e.inst, m, w.chain));
      } else {
        REQUIRE(w.improving_pair.has_value());
        const auto [s, t] = *w.improving_pair;
        CHECK(m[t] >= m[s] + 2);
        CHECK(e.members.count(unit_exchange(m, s, t)) == 1);
      }
      bool all_k = true;
      for (int k = 1; k <= n; ++k) {
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (const auto& z : e.members) best = std::min(best, k_largest_sum(z, k));
        all_k = all_k && k_largest_sum(m, k) == best;
      }
      CHECK(all_k == w.dec_min);
    }
  }
}

TEST_CASE("canonical structure") {
  for_sample([&](const corpus::Entry& e) {
    const auto d = canonical_decomposition(e.inst);
    const auto dec = oracle::dec_min(e.members);
    for (int i = 0; i < d.q(); ++i) {
      const auto& bi = d.block_instances[i];
      CHECK(d.betas[i] == ceil_div(bi.total(), d.partition[i].size()));
    }
    // Peak set: elements reaching beta_1 in some dec-min element.
    Subset reach;
    for (const auto& m : dec)
      for (int s = 0; s < e.inst.size(); ++s)
        if (m[s] == d.betas[0]) reach = reach.with(s);
    CHECK(reach == d.partition[0]);
    for (const auto& m : dec)
      for (int s : (e.inst.full() - d.partition[0]).elements()) CHECK(m[s] <= d.betas[0] - 1);

    // Canonical criterion agrees with the solver on every member.
    for (const auto& m : e.members)
      CHECK(verify_decmin_via_canonical(e.inst, d, m) == (dec.count(m) == 1));
  });
}

TEST_CASE("separation into blocks") {
  for_sample([&](const corpus::Entry& e) {
    const auto d = canonical_decomposition(e.inst);
    const auto dec = oracle::dec_min(e.members);
    std::vector<oracle::Points> block_dec;
    for (int i = 0; i < d.q(); ++i) {
      const auto& bi = d.block_instances[i];
      const auto idx = d.partition[i].elements();
      EnumerationBudget box;
      for (int s : idx) {
        box.lower.push_back(e.bounds.lower[s]);
        box.upper.push_back(e.bounds.upper[s]);
      }
      const auto pts = enumerate_members(bi, box);
      REQUIRE_FALSE(pts.empty());
      block_dec.push_back(oracle::dec_min(oracle::Points(pts.begin(), pts.end())));
    }
    for (const auto& m : e.members) {
      bool blocks = true;
      for (int i = 0; i < d.q(); ++i) {
        IntVector part;
        for (int s : d.partition[i].elements()) part.push_back(m[s]);
        blocks = blocks && block_dec[i].count(part) == 1;
      }
      CHECK(blocks == (dec.count(m) == 1));
    }
  });
}

TEST_CASE("matroid structure") {
  for_sample([&](const corpus::Entry& e) {
    const auto dm = build_dec_min_matroid(e.inst);
    for (int i = 0; i < dm.blocks(); ++i) {
      const auto bases = block_bases(dm, i);
      REQUIRE_FALSE(bases.empty());
      Subset covered, common = dm.decomposition.partition[i];
      for (Subset b : bases) {
        covered = covered | b;
        common = common & b;
      }
      // No loops; the value-fixed set is the intersection of all bases.
      CHECK(covered == dm.decomposition.partition[i]);
      CHECK(common == dm.fixed[i]);
      for (Subset b : bases) CHECK(is_independent_block(dm, i, b));
    }
  }, 2);
}

TEST_CASE("convex objectives") {
  for_sample([&](const corpus::Entry& e) {
    const auto dec = oracle::dec_min(e.members);
    auto quartic = [](const IntVector& z) {
      std::int64_t v = 0;
      for (auto x : z) v += x * x * x * x;
      return v;
    };
    CHECK(oracle::argmin(e.members, quartic) == dec);
    for (int k = 1; k <= e.inst.size(); ++k) {
      const auto mins = oracle::argmin(e.members, [k](const IntVector& z) { return k_largest_sum(z, k); });
      for (const auto& m : dec) CHECK(mins.count(m) == 1);
    }
  }, 1);
}

TEST_CASE("dual optimum set") {
  for_sample([&](const corpus::Entry& e) {
    const int n = e.inst.size();
    const auto dm = build_dec_min_matroid(e.inst);
    const auto& d = dm.decomposition;
    const std::int64_t w = oracle::squares(*oracle::dec_min(e.members).begin());
    IntVector base(n);
    for (int i = 0; i < d.q(); ++i)
      for (int s : d.partition[i].elements()) base[s] = 2 * d.betas[i] - 1;
    std::vector<IntVector> optimal;
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (std::int64_t code = 0; code < total; ++code) {
      IntVector pi = base;
      std::int64_t c = code;
      for (int s = 0; s < n; ++s, c /= 3) pi[s] += c % 3;
      const bool opt = is_dual_optimal(e.inst, d, dm.fixed, pi);
      CHECK(opt == (dual_value(e.inst, pi) == w));
      if (opt) optimal.push_back(pi);
    }
    REQUIRE_FALSE(optimal.empty());
    CHECK(optimal.front() == canonical_dual(d));
    std::set<IntVector> set(optimal.begin(), optimal.end());
    for (const auto& a : optimal)
      for (const auto& b : optimal) {
        IntVector lo(n), hi(n);
        for (int s = 0; s < n; ++s) {
          lo[s] = std::min(a[s], b[s]);
          hi[s] = std::max(a[s], b[s]);
        }
        CHECK(set.count(lo) == 1);
        CHECK(set.count(hi) == 1);
      }
  }, 4);
}

TEST_CASE("optimizer sets are closed under value-equivalence") {
  for_sample([&](const corpus::Entry& e) {
    const auto pts = enumerate_members(e.inst, e.bounds);
    const auto dec = dec_min_of(pts);
    for (const auto& p : pts) {
      const bool equiv = dec_compare(p, dec.front()) == DecOrder::kEqual;
      CHECK(equiv == (std::find(dec.begin(), dec.end(), p) != dec.end()));
    }
    CHECK(brute_inc_max(e.inst, e.bounds) == dec);
    CHECK(brute_min_sqsum(e.inst, e.bounds).second == dec);
  });
}
