#include "decmin/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "decmin/io.hpp"

namespace decmin::cli {

namespace {

using io::Json;

struct CommonFlags {
  std::string instance;
  bool json = false;
  std::string bounds;
  int scan_limit = kDefaultScanLimit;
  bool verify = false;
  std::uint64_t seed = 0;  // accepted for interface symmetry; solvers are deterministic
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("instance", f.instance, "instance JSON file")->required();
  cmd->add_flag("--json", f.json, "emit JSON");
  cmd->add_option("--bounds", f.bounds, "enumeration box lo,hi for every element");
  cmd->add_option("--scan-limit", f.scan_limit, "largest ground set for exhaustive subset scans")
      ->check(CLI::Range(1, kMaxGroundSize));
  cmd->add_flag("--verify", f.verify, "cross-check against brute-force enumeration");
  cmd->add_option("--seed", f.seed, "seed for randomized checks");
}

std::string read_text(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::optional<EnumerationBudget> parse_bounds(const std::string& text, int n) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::kParse, "--bounds expects lo,hi");
  EnumerationBudget b;
  try {
    const std::int64_t lo = std::stoll(text.substr(0, comma));
    const std::int64_t hi = std::stoll(text.substr(comma + 1));
    b.lower.assign(n, lo);
    b.upper.assign(n, hi);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::kParse, "--bounds expects lo,hi");
  }
  return b;
}

EnumerationBudget require_bounds(const CommonFlags& f, const SupermodularInstance& inst) {
  if (auto b = parse_bounds(f.bounds, inst.size())) return *b;
  if (auto b = natural_bounds(inst)) return *b;
  throw Error(ErrorKind::kPrecondition, "instance has unbounded components; pass --bounds lo,hi");
}

std::string plain_vector(const IntVector& v, const GroundSet& g) {
  std::string s;
  for (int i = 0; i < g.size(); ++i) s += (i ? " " : "") + g.name(i) + "=" + std::to_string(v[i]);
  return s;
}

std::string plain_subsets(const Json& list, const char* sep = " < ") {
  std::string s;
  for (const auto& x : list) {
    if (!s.empty()) s += sep;
    s += "{";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get<std::string>();
    s += "}";
  }
  return s;
}

std::string yes_no(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(24) << key << value << '\n';
}

std::string plain_map(const Json& obj) {
  std::string s;
  for (const auto& [k, v] : obj.items()) s += (s.empty() ? "" : " ") + k + "=" + v.dump();
  return s;
}

void print_certificate(std::ostream& out, const Json& doc) {
  const Json& inst = doc["instance"];
  row(out, "instance", inst["kind"].get<std::string>() + " n=" + inst["n"].dump() + " digest=" +
                           inst["digest"].get<std::string>());
  row(out, "dec-min", plain_map(doc["dec_min"]));
  row(out, "square sum", doc["objective"]["square_sum"].dump());
  row(out, "difference sum", doc["objective"]["difference_sum"].dump());
  const Json& c = doc["canonical"];
  row(out, "canonical chain", plain_subsets(c["chain"]));
  row(out, "betas", c["betas"].dump());
  row(out, "ranks", c["rs"].dump());
  row(out, "partition", plain_subsets(c["partition"], " | "));
  row(out, "fixed", plain_subsets(c["fixed"], " | "));
  row(out, "dec-min count", doc["matroid"]["dec_min_count"].dump());
  row(out, "pi*", plain_map(doc["dual"]["pi_star"]));
  row(out, "dual value", doc["dual"]["dual_value"].dump());
  row(out, "duality gap", doc["dual"]["gap"].dump());
  for (const auto& [k, v] : doc["verification"].items()) {
    if (v.is_boolean()) row(out, k, yes_no(v));
  }
  if (doc["verification"].contains("brute_force")) {
    for (const auto& [k, v] : doc["verification"]["brute_force"].items()) row(out, "brute " + k, v.dump());
  }
}

int cmd_solve(const CommonFlags& f, std::ostream& out) {
  const io::LoadedInstance loaded = io::load_instance_file(f.instance, f.scan_limit);
  io::SolveOptions opts;
  opts.verify = f.verify;
  opts.bounds = parse_bounds(f.bounds, loaded.instance.size());
  const Json doc = io::solve_certificate(loaded, opts);
  if (f.json)
    out << doc.dump(2) << '\n';
  else
    print_certificate(out, doc);
  return kOk;
}

int cmd_enumerate(const CommonFlags& f, std::ostream& out) {
  const io::LoadedInstance loaded = io::load_instance_file(f.instance, f.scan_limit);
  const auto& inst = loaded.instance;
  for (const auto& m : enumerate_members(inst, require_bounds(f, inst)))
    out << io::vector_json(m, inst.ground()).dump() << '\n';
  return kOk;
}

int cmd_cheapest(const CommonFlags& f, const std::string& costs_path, std::istream& in, std::ostream& out) {
  const io::LoadedInstance loaded = io::load_instance_file(f.instance, f.scan_limit);
  const auto& inst = loaded.instance;
  const auto& g = inst.ground();
  const auto cost = io::parse_costs(read_text(costs_path, in), g);
  const DecMinMatroid dm = build_dec_min_matroid(inst);
  const IntVector m = cheapest_dec_min(dm, cost);
  const Rational c = vector_cost(m, cost);

  Json doc;
  doc["vector"] = io::vector_json(m, g);
  doc["cost"] = io::format_rational(c);
  if (f.verify) {
    const auto brute = brute_dec_min(inst, require_bounds(f, inst));
    Rational best = vector_cost(brute.front(), cost);
    for (const auto& v : brute) best = std::min(best, vector_cost(v, cost));
    doc["brute_force_cost"] = io::format_rational(best);
    doc["verified"] = best == c && std::find(brute.begin(), brute.end(), m) != brute.end();
  }
  if (f.json) {
    out << doc.dump(2) << '\n';
  } else {
    row(out, "cheapest dec-min", plain_vector(m, g));
    row(out, "cost", doc["cost"].get<std::string>());
    if (f.verify) row(out, "verified", yes_no(doc["verified"]));
  }
  return kOk;
}

struct VerifyFlags {
  std::string vector, pi, certificate;
};

int cmd_verify(const CommonFlags& f, const VerifyFlags& v, std::istream& in, std::ostream& out) {
  const io::LoadedInstance loaded = io::load_instance_file(f.instance, f.scan_limit);
  const auto& inst = loaded.instance;
  const auto& g = inst.ground();
  inst.require_scannable("verify");

  IntVector m;
  std::optional<IntVector> pi;
  Json doc;
  Json verdicts = Json::object();
  if (!v.certificate.empty()) {
    Json cert;
    try {
      cert = Json::parse(read_text(v.certificate, in));
      m = io::vector_from_json(cert.at("dec_min"), g);
      pi = io::vector_from_json(cert.at("dual").at("pi_star"), g);
      verdicts["digest_matches"] = cert.at("instance").at("digest").get<std::string>() == loaded.digest;
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kParse, std::string("certificate: ") + e.what());
    }
  } else {
    if (v.vector.empty()) throw Error(ErrorKind::kParse, "verify needs --vector or --certificate");
    m = io::parse_vector(v.vector, g);
  }
  if (!v.pi.empty()) pi = io::parse_vector(v.pi, g);

  doc["vector"] = io::vector_json(m, g);
  const Membership member = is_member(inst, m);
  verdicts["member"] = member.member;
  if (!member) {
    doc["violated_set"] = io::subset_json(*member.witness, g);
    doc["verdicts"] = verdicts;
    doc["all_true"] = false;
    if (f.json) {
      out << doc.dump(2) << '\n';
    } else {
      row(out, "member", "no");
      row(out, "violated set", g.format(*member.witness));
    }
    return kExitInfeasible;
  }

  const DecMinWitness w = is_dec_min(inst, m);
  verdicts["dec_min"] = w.dec_min;
  if (w.improving_pair) {
    doc["improving_pair"] = {{"s", g.name(w.improving_pair->s)}, {"t", g.name(w.improving_pair->t)}};
  } else {
    Json chain = Json::array();
    for (Subset c : w.chain) chain.push_back(io::subset_json(c, g));
    doc["chain"] = chain;
    verdicts["chain_valid"] = valid_chain_certificate(inst, m, w.chain);
  }
  const std::int64_t sq = square_sum(m);
  doc["square_sum"] = sq;
  if (pi) {
    const DualCertificate d = make_dual_certificate(inst, m, *pi);
    doc["pi"] = io::vector_json(*pi, g);
    doc["dual_value"] = d.dual_value;
    doc["gap"] = sq - d.dual_value;
    verdicts["o1"] = d.criteria.o1;
    verdicts["o2"] = d.criteria.o2;
    verdicts["zero_gap"] = sq == d.dual_value;
  }
  bool all = true;
  for (const auto& [k, b] : verdicts.items()) all = all && b.get<bool>();
  doc["verdicts"] = verdicts;
  doc["all_true"] = all;

  if (f.json) {
    out << doc.dump(2) << '\n';
  } else {
    row(out, "vector", plain_vector(m, g));
    for (const auto& [k, b] : verdicts.items()) row(out, k, yes_no(b));
    if (doc.contains("improving_pair"))
      row(out, "improving pair", "s=" + doc["improving_pair"]["s"].get<std::string>() +
                                     " t=" + doc["improving_pair"]["t"].get<std::string>());
    if (doc.contains("chain")) row(out, "chain", plain_subsets(doc["chain"]));
    row(out, "square sum", std::to_string(sq));
    if (pi) {
      row(out, "dual value", doc["dual_value"].dump());
      row(out, "gap", doc["gap"].dump());
    }
  }
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kPrecondition:
      return kExitParse;
    case ErrorKind::kInfeasible:
      return kExitInfeasible;
    case ErrorKind::kScanTooLarge:
    case ErrorKind::kBudgetExceeded:
      return kExitLimit;
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dec-min elements of M-convex sets", "decmin"};
  app.require_subcommand(1);

  CommonFlags common;
  VerifyFlags verify;
  std::string costs_path;

  auto* solve = app.add_subcommand("solve", "compute a dec-min element with its certificate");
  add_common(solve, common);
  auto* enumerate = app.add_subcommand("enumerate", "list every member inside a box, one JSON object per line");
  add_common(enumerate, common);
  auto* cheapest = app.add_subcommand("cheapest", "cheapest dec-min element for linear costs");
  add_common(cheapest, common);
  cheapest->add_option("--costs", costs_path, "JSON object of per-element costs")->required();
  auto* check = app.add_subcommand("verify", "check membership, dec-minimality and a dual vector");
  add_common(check, common);
  check->add_option("--vector", verify.vector, "candidate vector");
  check->add_option("--pi", verify.pi, "dual vector");
  check->add_option("--certificate", verify.certificate, "certificate from 'solve --json', or - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kExitParse;
  }

  try {
    if (*solve) return cmd_solve(common, out);
    if (*enumerate) return cmd_enumerate(common, out);
    if (*cheapest) return cmd_cheapest(common, costs_path, in, out);
    return cmd_verify(common, verify, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace decmin::cli
