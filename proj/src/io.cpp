#include "decmin/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace decmin::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::kParse, what); }

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) parse_fail(std::string("missing array '") + field + "'");
  std::vector<std::string> out;
  for (const auto& e : j.at(field)) {
    if (!e.is_string()) parse_fail(std::string("'") + field + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<int, int>> edge_list(const Json& j, const GroundSet& nodes) {
  if (!j.contains("edges") || !j.at("edges").is_array()) parse_fail("missing array 'edges'");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      parse_fail("edges must be [\"u\",\"v\"] pairs");
    edges.emplace_back(nodes.index_of(e[0].get<std::string>()), nodes.index_of(e[1].get<std::string>()));
  }
  return edges;
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(trim(part));
  return out;
}

SupermodularInstance parse_explicit(const Json& j) {
  GroundSet ground(string_list(j, "names"));
  if (ground.size() > 24) throw Error(ErrorKind::kScanTooLarge, "explicit tables limited to 24 elements");
  if (!j.contains("p") || !j.at("p").is_object()) parse_fail("missing object 'p'");
  std::vector<ExtInt> table(std::size_t{1} << ground.size(), ExtInt::neg_inf());
  table[0] = 0;
  for (const auto& [key, value] : j.at("p").items()) {
    if (!value.is_number_integer()) parse_fail("p values must be integers");
    const Subset x = ground.subset_of(split_commas(key));
    if (x.empty() && value.get<std::int64_t>() != 0) throw Error(ErrorKind::kInfeasible, "p(empty set) must be 0");
    table[x.mask] = value.get<std::int64_t>();
  }
  return table_instance(std::move(ground), std::move(table), "explicit");
}

SupermodularInstance parse_bipartite(const Json& j) {
  GroundSet left(string_list(j, "S"));
  std::vector<std::string> right = string_list(j, "T");
  const Json adj = j.value("adj", Json::object());
  if (!adj.is_object()) parse_fail("'adj' must be an object");
  std::vector<std::vector<int>> adjacency;
  for (const auto& t : right) {
    std::vector<int> nb;
    if (adj.contains(t)) {
      for (const auto& s : adj.at(t)) {
        if (!s.is_string()) parse_fail("adjacency lists hold element names");
        nb.push_back(left.index_of(s.get<std::string>()));
      }
    }
    adjacency.push_back(std::move(nb));
  }
  for (const auto& [key, value] : adj.items()) {
    if (std::find(right.begin(), right.end(), key) == right.end())
      parse_fail("adjacency for unknown right node '" + key + "'");
  }
  return semimatching_instance(BipartiteGraph(std::move(left), std::move(right), std::move(adjacency)));
}

SupermodularInstance parse_kbases(const Json& j) {
  if (!j.contains("k") || !j.at("k").is_number_integer()) parse_fail("missing integer 'k'");
  const int k = j.at("k").get<int>();
  if (!j.contains("matroid") || !j.at("matroid").is_object()) parse_fail("missing object 'matroid'");
  const Json& m = j.at("matroid");
  const std::string type = m.value("type", "");
  if (type == "graphic") {
    GroundSet nodes(string_list(m, "nodes"));
    auto edges = edge_list(m, nodes);
    std::vector<std::string> names;
    for (auto [u, v] : edges) {
      std::string base = nodes.name(u) + "-" + nodes.name(v), name = base;
      for (int rep = 2; std::find(names.begin(), names.end(), name) != names.end(); ++rep)
        name = base + "#" + std::to_string(rep);
      names.push_back(name);
    }
    return kbases_instance(ExplicitMatroid::graphic(nodes.size(), edges, GroundSet(names)), k);
  }
  if (type == "bases") {
    GroundSet ground(string_list(m, "ground"));
    if (!m.contains("bases") || !m.at("bases").is_array()) parse_fail("missing array 'bases'");
    std::vector<Subset> bases;
    for (const auto& b : m.at("bases")) {
      std::vector<std::string> labels;
      for (const auto& e : b) labels.push_back(e.get<std::string>());
      bases.push_back(ground.subset_of(labels));
    }
    return kbases_instance(ExplicitMatroid::from_bases(std::move(ground), std::move(bases)), k);
  }
  parse_fail("matroid type must be 'graphic' or 'bases'");
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

LoadedInstance parse_instance(const std::string& text, int scan_limit) {
  const Json j = parse_json(text, "instance");
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    parse_fail("instance needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "explicit") {
      SupermodularInstance inst = parse_explicit(j).with_scan_limit(scan_limit);
      if (auto bad = audit_supermodular(inst)) {
        const auto& g = inst.ground();
        throw Error(ErrorKind::kInfeasible, "p is not supermodular on " + g.format(bad->x) + ", " +
                                                g.format(bad->y));
      }
      return {kind, inst, std::nullopt, fnv1a_hex(text)};
    }
    if (kind == "orientation") {
      GroundSet nodes(string_list(j, "nodes"));
      auto edges = edge_list(j, nodes);
      MultiGraph g(std::move(nodes), std::move(edges));
      return {kind, orientation_instance(g).with_scan_limit(scan_limit), g, fnv1a_hex(text)};
    }
    if (kind == "bipartite") return {kind, parse_bipartite(j).with_scan_limit(scan_limit), std::nullopt, fnv1a_hex(text)};
    if (kind == "k_bases") return {kind, parse_kbases(j).with_scan_limit(scan_limit), std::nullopt, fnv1a_hex(text)};
  } catch (const Json::exception& e) {
    parse_fail(std::string("instance: ") + e.what());
  }
  parse_fail("unknown instance kind '" + kind + "'");
}

LoadedInstance load_instance_file(const std::string& path, int scan_limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), scan_limit);
}

IntVector vector_from_json(const Json& j, const GroundSet& ground) {
  IntVector v(ground.size(), 0);
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != ground.size()) parse_fail("vector has the wrong length");
    for (int i = 0; i < ground.size(); ++i) {
      if (!j[i].is_number_integer()) parse_fail("vector entries must be integers");
      v[i] = j[i].get<std::int64_t>();
    }
    return v;
  }
  if (!j.is_object()) parse_fail("vector must be an array or an object");
  std::vector<bool> seen(ground.size(), false);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) parse_fail("vector entries must be integers");
    const int i = ground.index_of(key);
    v[i] = value.get<std::int64_t>();
    seen[i] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) parse_fail("vector misses an element");
  return v;
}

IntVector parse_vector(const std::string& text, const GroundSet& ground) {
  const std::string t = trim(text);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return vector_from_json(parse_json(t, "vector"), ground);
  if (t.find('=') != std::string::npos) {
    Json obj = Json::object();
    for (const auto& part : split_commas(t)) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) parse_fail("mixed positional and name=value entries");
      const std::string name = trim(part.substr(0, eq)), value = trim(part.substr(eq + 1));
      if (obj.contains(name)) parse_fail("duplicate entry for '" + name + "'");
      try {
        std::size_t used = 0;
        obj[name] = std::stoll(value, &used);
        if (used != value.size()) parse_fail("bad integer '" + value + "'");
      } catch (const std::logic_error&) {
        parse_fail("bad integer '" + value + "'");
      }
    }
    return vector_from_json(obj, ground);
  }
  IntVector v;
  for (const auto& part : split_commas(t)) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(part, &used));
      if (used != part.size()) parse_fail("bad integer '" + part + "'");
    } catch (const std::logic_error&) {
      parse_fail("bad integer '" + part + "'");
    }
  }
  if (static_cast<int>(v.size()) != ground.size()) parse_fail("vector has the wrong length");
  return v;
}

namespace {

Rational parse_rational(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) parse_fail("costs must be integers or \"p/q\" strings");
  const std::string s = value.get<std::string>();
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    const std::int64_t den = std::stoll(s.substr(slash + 1));
    if (den == 0) parse_fail("zero denominator in cost '" + s + "'");
    return Rational(std::stoll(s.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    parse_fail("bad cost '" + s + "'");
  }
}

}  // namespace

std::vector<Rational> parse_costs(const std::string& text, const GroundSet& ground) {
  const Json j = parse_json(text, "costs");
  if (!j.is_object()) parse_fail("costs must be an object keyed by element name");
  std::vector<std::optional<Rational>> costs(ground.size());
  for (const auto& [key, value] : j.items()) costs[ground.index_of(key)] = parse_rational(value);
  std::vector<Rational> out;
  for (int i = 0; i < ground.size(); ++i) {
    if (!costs[i]) throw Error(ErrorKind::kInfeasible, "cost file has no entry for '" + ground.name(i) + "'");
    out.push_back(*costs[i]);
  }
  return out;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json vector_json(const IntVector& v, const GroundSet& ground) {
  Json j = Json::object();
  for (int i = 0; i < ground.size(); ++i) j[ground.name(i)] = v.at(i);
  return j;
}

Json subset_json(Subset x, const GroundSet& ground) {
  Json j = Json::array();
  for (const auto& l : ground.labels(x)) j.push_back(l);
  return j;
}

namespace {

Json subsets_json(const std::vector<Subset>& xs, const GroundSet& ground) {
  Json j = Json::array();
  for (Subset x : xs) j.push_back(subset_json(x, ground));
  return j;
}

IntVector start_vector(const LoadedInstance& loaded) {
  if (loaded.graph) return decmin_orientation(*loaded.graph).in_degrees;
  const auto order = finite_order(loaded.instance);
  if (!order) throw Error(ErrorKind::kInfeasible, "no chain of finite prefixes to start the greedy vertex from");
  return find_dec_min(loaded.instance, greedy_vertex(loaded.instance, *order));
}

}  // namespace

Json solve_certificate(const LoadedInstance& loaded, const SolveOptions& options) {
  const SupermodularInstance& inst = loaded.instance;
  const GroundSet& g = inst.ground();
  inst.require_scannable("solve");

  const IntVector m = start_vector(loaded);
  const DecMinWitness witness = is_dec_min(inst, m);
  const DecMinMatroid dm = build_dec_min_matroid(inst);
  const CanonicalDecomposition& d = dm.decomposition;
  const IntVector pi = canonical_dual(d);
  const DualCertificate dual = make_dual_certificate(inst, m, pi);
  const std::int64_t w = square_sum(m);

  Json doc;
  doc["instance"] = {{"kind", loaded.kind},
                     {"digest", loaded.digest},
                     {"n", inst.size()},
                     {"elements", g.names()},
                     {"p_total", inst.total()}};
  doc["dec_min"] = vector_json(m, g);
  doc["objective"] = {{"square_sum", w}, {"difference_sum", difference_sum(m)}};

  Json degenerate = Json::array();
  std::vector<std::int64_t> sizes, ranks, bases_per_block;
  for (int i = 0; i < d.q(); ++i) {
    degenerate.push_back(dm.fixed[i] == d.partition[i]);
    sizes.push_back(d.partition[i].size());
    ranks.push_back(d.rs[i]);
    bases_per_block.push_back(static_cast<std::int64_t>(block_bases(dm, i).size()));
  }
  doc["canonical"] = {{"q", d.q()},
                      {"chain", subsets_json(d.chain, g)},
                      {"partition", subsets_json(d.partition, g)},
                      {"betas", d.betas},
                      {"rs", d.rs},
                      {"fixed", subsets_json(dm.fixed, g)},
                      {"degenerate", degenerate}};
  doc["matroid"] = {{"block_sizes", sizes},
                    {"ranks", ranks},
                    {"bases_per_block", bases_per_block},
                    {"dec_min_count", count_dec_min(dm)}};
  doc["dual"] = {{"pi_star", vector_json(pi, g)},
                 {"dual_value", dual.dual_value},
                 {"is_odd", dual.is_odd},
                 {"o1", dual.criteria.o1},
                 {"o2", dual.criteria.o2},
                 {"gap", w - dual.dual_value}};

  bool canonical_agrees = false;
  if (witness.dec_min) canonical_agrees = decomposition_from_decmin(inst, m).same_as(d);
  Json ver;
  ver["member"] = static_cast<bool>(is_member(inst, m));
  ver["dec_min"] = witness.dec_min;
  ver["inc_max"] = is_inc_max(inst, m);
  ver["chain"] = subsets_json(witness.chain, g);
  ver["chain_valid"] = witness.dec_min && valid_chain_certificate(inst, m, witness.chain);
  ver["canonical_criterion"] = verify_decmin_via_canonical(inst, d, m);
  ver["canonical_agrees"] = canonical_agrees;
  ver["dual_optimal"] = is_dual_optimal(inst, d, dm.fixed, pi);
  ver["strong_duality"] = dual.dual_value == w;

  if (options.verify) {
    std::optional<EnumerationBudget> bounds = options.bounds ? options.bounds : natural_bounds(inst);
    if (!bounds) throw Error(ErrorKind::kPrecondition, "--verify needs --bounds for this instance");
    const auto members = enumerate_members(inst, *bounds);
    const auto brute = dec_min_of(members);
    const auto [min_w, argmin] = min_square_sum_of(members);
    ver["brute_force"] = {
        {"members", members.size()},
        {"dec_min_count", brute.size()},
        {"contains_solution", std::find(brute.begin(), brute.end(), m) != brute.end()},
        {"matroid_agrees", brute == enumerate_dec_min(dm)},
        {"min_square_sum", min_w},
        {"dual_matches", min_w == dual.dual_value}};
  }
  doc["verification"] = ver;
  return doc;
}

}  // namespace decmin::io
