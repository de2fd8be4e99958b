#pragma once

// Instance files, vector/cost parsing and the certificate document.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "decmin/canonical.hpp"
#include "decmin/duality.hpp"
#include "decmin/instances.hpp"
#include "decmin/matroid.hpp"
#include "decmin/reference.hpp"
#include "decmin/solver.hpp"

namespace decmin::io {

using Json = nlohmann::ordered_json;

struct LoadedInstance {
  std::string kind;  // explicit | orientation | bipartite | k_bases
  SupermodularInstance instance;
  std::optional<MultiGraph> graph;  // orientation instances only
  std::string digest;               // FNV-1a 64 of the file bytes, hex
};

/// Parses the instance schema. Explicit tables are audited for supermodularity.
LoadedInstance parse_instance(const std::string& text, int scan_limit = kDefaultScanLimit);
LoadedInstance load_instance_file(const std::string& path, int scan_limit = kDefaultScanLimit);

std::string fnv1a_hex(const std::string& bytes);

/// "3,2,2,1", a JSON array, or a JSON object keyed by element name.
IntVector parse_vector(const std::string& text, const GroundSet& ground);

/// JSON object name -> integer or "p/q"; every element required.
std::vector<Rational> parse_costs(const std::string& text, const GroundSet& ground);

std::string format_rational(const Rational& r);

Json vector_json(const IntVector& v, const GroundSet& ground);
IntVector vector_from_json(const Json& j, const GroundSet& ground);
Json subset_json(Subset x, const GroundSet& ground);

struct SolveOptions {
  bool verify = false;                     // brute-force cross-check
  std::optional<EnumerationBudget> bounds; // overrides natural bounds
};

/// Full certificate for one dec-min element, in a fixed field order.
Json solve_certificate(const LoadedInstance& loaded, const SolveOptions& options);

}  // namespace decmin::io
