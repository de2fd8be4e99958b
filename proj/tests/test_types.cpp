#include <random>

#include "decmin/types.hpp"
#include "doctest.h"
#include "printing.hpp"

using namespace decmin;

TEST_CASE("subset operations") {
  Subset a(0b0110), b(0b0011);
  CHECK((a | b) == Subset(0b0111));
  CHECK((a & b) == Subset(0b0010));
  CHECK((a - b) == Subset(0b0100));
  CHECK(a.size() == 2);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(0));
  CHECK(Subset(0b0010).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.with(0) == Subset(0b0111));
  CHECK(a.without(2) == Subset(0b0010));
  CHECK(Subset::full(64).size() == 64);
  CHECK(Subset::full(3) == Subset(0b111));
  CHECK(a.elements() == std::vector<int>{1, 2});
  CHECK(Subset().empty());
}

TEST_CASE("deposit and extract are inverse and monotone") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Mask universe = rng() & 0xFFFF;
    const int bits = std::popcount(universe);
    Mask prev = 0;
    for (Mask k = 0; k < (Mask{1} << bits); ++k) {
      const Mask m = deposit(k, universe);
      CHECK((m & ~universe) == 0);
      CHECK(extract(m, universe) == k);
      if (k > 0) CHECK(m > prev);
      prev = m;
    }
  }
}

TEST_CASE("extended integers") {
  const ExtInt ninf = ExtInt::neg_inf(), pinf = ExtInt::pos_inf();
  CHECK(ExtInt(3) + ExtInt(4) == ExtInt(7));
  CHECK(ninf + ExtInt(5) == ninf);
  CHECK(ExtInt(5) - ninf == pinf);
  CHECK(-pinf == ninf);
  CHECK(ninf < ExtInt(-1000000));
  CHECK(ExtInt(1000000) < pinf);
  CHECK(ninf == ninf);
  CHECK_FALSE(ninf == pinf);
  CHECK(ExtInt(2) <= ExtInt(2));
  CHECK(ninf.str() == "-inf");
  CHECK(pinf.str() == "+inf");
  CHECK_THROWS_AS((void)ninf.value(), Error);
  CHECK_THROWS_AS((void)(ninf + pinf), Error);
}

TEST_CASE("ground set labels") {
  GroundSet g({"a", "b", "c"});
  CHECK(g.index_of("b") == 1);
  CHECK(g.subset_of({"c", "a"}) == Subset(0b101));
  CHECK(g.labels(Subset(0b110)) == std::vector<std::string>{"b", "c"});
  CHECK(g.format(Subset(0b011)) == "{a,b}");
  CHECK(g.format(Subset()) == "{}");
  CHECK(g.restricted_to(Subset(0b101)).names() == std::vector<std::string>{"a", "c"});

  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::kParse;
  };
  CHECK(kind_of([&] { (void)g.index_of("z"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { GroundSet({"a", "a"}); }) == ErrorKind::kParse);
  CHECK(kind_of([] { GroundSet(std::vector<std::string>{}); }) == ErrorKind::kParse);
}

TEST_CASE("integer helpers") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 2) == -3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(ceil_div(4, 3) == 2);
  CHECK(subset_sum({3, 2, 2, 1}, Subset(0b0011)) == 5);
  CHECK(unit_exchange({1, 3, 0}, 0, 1) == IntVector{2, 2, 0});
}
