#include "decmin/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "printing.hpp"

using namespace decmin;
using io::Json;

namespace {

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParse;
}

}  // namespace

TEST_CASE("fnv1a digest") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("parse explicit instances") {
  const auto l = io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"a":1,"b":0,"a,b":3,"":0}})");
  CHECK(l.kind == "explicit");
  CHECK(l.instance(Subset(0b01)) == ExtInt(1));
  CHECK(l.instance(Subset(0b11)) == ExtInt(3));
  CHECK_FALSE(l.graph.has_value());
  const auto open = io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"a,b":3,"b":1}})");
  CHECK(open.instance(Subset(0b01)).is_neg_inf());
  // Keys tolerate spaces and any element order.
  const auto spaced = io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"b, a":2}})");
  CHECK(spaced.instance.total() == 2);

  CHECK(error_kind([] { io::parse_instance(R"({"kind":"explicit","names":["a"],"p":{"":1,"a":1}})"); }) ==
        ErrorKind::kInfeasible);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"a":2,"b":2,"a,b":3}})"); }) ==
        ErrorKind::kInfeasible);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"a":1}})"); }) ==
        ErrorKind::kInfeasible);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"explicit","names":["a"],"p":{"z":1}})"); }) ==
        ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"explicit","names":["a"],"p":{"a":"x"}})"); }) ==
        ErrorKind::kParse);
}

TEST_CASE("parse graph-based instances") {
  const auto o = io::load_instance_file(fixtures::data_file("square.json"));
  CHECK(o.kind == "orientation");
  REQUIRE(o.graph.has_value());
  CHECK(o.graph->edges.size() == 8);
  CHECK(o.instance.total() == 8);

  const auto b = io::load_instance_file(fixtures::data_file("semimatching.json"));
  CHECK(b.kind == "bipartite");
  CHECK(b.instance.total() == 4);

  const auto k = io::load_instance_file(fixtures::data_file("two_spanning_trees.json"));
  CHECK(k.kind == "k_bases");
  CHECK(k.instance.size() == 6);
  CHECK(k.instance.ground().name(0) == "u-v");
  CHECK(k.instance.total() == 6);

  const auto par = io::parse_instance(
      R"({"kind":"k_bases","k":1,"matroid":{"type":"graphic","nodes":["u","v"],"edges":[["u","v"],["u","v"]]}})");
  CHECK(par.instance.ground().names() == std::vector<std::string>{"u-v", "u-v#2"});

  const auto bases = io::parse_instance(
      R"({"kind":"k_bases","k":2,"matroid":{"type":"bases","ground":["x","y"],"bases":[["x"],["y"]]}})");
  CHECK(bases.instance.total() == 2);
}

TEST_CASE("instance parse errors") {
  CHECK(error_kind([] { io::parse_instance("{not json"); }) == ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"flow"})"); }) == ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"([1,2])"); }) == ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"orientation","nodes":["a"],"edges":[["a","a"]]})"); }) ==
        ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"orientation","nodes":["a","b"],"edges":[["a"]]})"); }) ==
        ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"orientation","nodes":["a","b"]})"); }) == ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"bipartite","S":["s"],"T":["t"],"adj":{"u":["s"]}})"); }) ==
        ErrorKind::kParse);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"bipartite","S":["s"],"T":["t"],"adj":{}})"); }) ==
        ErrorKind::kInfeasible);
  CHECK(error_kind([] { io::parse_instance(R"({"kind":"k_bases","k":1,"matroid":{"type":"uniform"}})"); }) ==
        ErrorKind::kParse);
  CHECK(error_kind([] { io::load_instance_file("/nonexistent/instance.json"); }) == ErrorKind::kParse);
}

TEST_CASE("vectors and costs") {
  const GroundSet g({"a", "b", "c"});
  CHECK(io::parse_vector("2, 1,1", g) == IntVector{2, 1, 1});
  CHECK(io::parse_vector("[2,1,1]", g) == IntVector{2, 1, 1});
  CHECK(io::parse_vector(R"({"c":1,"a":2,"b":-1})", g) == IntVector{2, -1, 1});
  CHECK(error_kind([&] { io::parse_vector("2,1", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_vector("2,x,1", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_vector(R"({"a":2,"b":1})", g); }) == ErrorKind::kParse);
  CHECK(io::parse_vector("c=1, a=2,b=-1", g) == IntVector{2, -1, 1});
  CHECK(error_kind([&] { io::parse_vector("a=2,b=1", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_vector("a=2,a=1,c=0", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_vector("a=2,1,c=0", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_vector("a=2,q=1,c=0", g); }) == ErrorKind::kParse);

  const auto c = io::parse_costs(R"({"a":1,"b":"2/4","c":"-3"})", g);
  CHECK(c == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(-3)});
  CHECK(io::format_rational(Rational(1, 2)) == "1/2");
  CHECK(io::format_rational(Rational(-4, 2)) == "-2");
  CHECK(error_kind([&] { io::parse_costs(R"({"a":1,"b":2})", g); }) == ErrorKind::kInfeasible);
  CHECK(error_kind([&] { io::parse_costs(R"({"a":1,"b":2,"c":"1/0"})", g); }) == ErrorKind::kParse);
  CHECK(error_kind([&] { io::parse_costs(R"([1,2,3])", g); }) == ErrorKind::kParse);

  const Json v = io::vector_json({3, 2, 2}, g);
  CHECK(v.dump() == R"({"a":3,"b":2,"c":2})");
  CHECK(io::vector_from_json(v, g) == IntVector{3, 2, 2});
  CHECK(io::subset_json(Subset(0b101), g).dump() == R"(["a","c"])");
}

TEST_CASE("certificate document") {
  const auto loaded = io::load_instance_file(fixtures::data_file("square.json"));
  const Json doc = io::solve_certificate(loaded, {});
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"instance", "dec_min", "objective", "canonical", "matroid", "dual",
                                         "verification"});
  CHECK(doc["canonical"]["betas"] == Json::array({3, 2}));
  CHECK(doc["canonical"]["partition"] == Json::parse(R"([["a","b"],["c","d"]])"));
  CHECK(doc["objective"]["square_sum"] == 18);
  CHECK(doc["dual"]["dual_value"] == doc["objective"]["square_sum"]);
  CHECK(doc["dual"]["gap"] == 0);
  CHECK(doc["matroid"]["dec_min_count"] == 4);
  CHECK(doc["canonical"]["chain"].back().size() == 4);
  for (const auto& [k, v] : doc["verification"].items())
    if (v.is_boolean()) CHECK_MESSAGE(v.get<bool>(), k);
  CHECK_FALSE(doc["verification"].contains("brute_force"));

  io::SolveOptions opts;
  opts.verify = true;
  const Json checked = io::solve_certificate(loaded, opts);
  CHECK(checked["verification"]["brute_force"]["matroid_agrees"] == true);
  CHECK(checked["verification"]["brute_force"]["dual_matches"] == true);
  CHECK(io::solve_certificate(loaded, {}).dump() == doc.dump());

  const auto t = io::load_instance_file(fixtures::data_file("triangle.json"));
  const Json dt = io::solve_certificate(t, {});
  CHECK(dt["canonical"]["betas"] == Json::array({2}));
  CHECK(dec_compare(io::vector_from_json(dt["dec_min"], t.instance.ground()), {2, 1, 1}) == DecOrder::kEqual);

  const auto open = io::parse_instance(R"({"kind":"explicit","names":["a","b"],"p":{"a,b":3,"b":1}})");
  CHECK(error_kind([&] { io::solve_certificate(open, opts); }) == ErrorKind::kPrecondition);
  io::SolveOptions boxed = opts;
  boxed.bounds = EnumerationBudget{{-5, -5}, {5, 5}};
  CHECK(io::solve_certificate(open, boxed)["verification"]["brute_force"]["dual_matches"] == true);
}
