#pragma once

// Application classes realized as supermodular instances: graph
// orientations, semi-matchings and sums of k matroid bases.

#include <string>
#include <utility>
#include <vector>

#include "decmin/core.hpp"

namespace decmin {

struct MultiGraph {
  GroundSet nodes;
  std::vector<std::pair<int, int>> edges;  // repeats encode multiplicity

  MultiGraph(GroundSet nodes, std::vector<std::pair<int, int>> edges);
  int degree(int v) const;
};

/// Edge i points into head[i].
struct Orientation {
  std::vector<int> head;

  IntVector in_degrees(const MultiGraph& g) const;
};

struct BipartiteGraph {
  GroundSet left;                         // S, the ground set of the instance
  std::vector<std::string> right;         // T
  std::vector<std::vector<int>> adjacency;  // per t in T, neighbours in S

  BipartiteGraph(GroundSet left, std::vector<std::string> right,
                 std::vector<std::vector<int>> adjacency);
};

class ExplicitMatroid {
 public:
  /// Matroid given by its list of bases; the exchange axiom is validated.
  static ExplicitMatroid from_bases(GroundSet ground, std::vector<Subset> bases);
  /// Graphic matroid: the ground set is the edge list.
  static ExplicitMatroid graphic(int node_count, std::vector<std::pair<int, int>> edges,
                                 GroundSet edge_names);

  const GroundSet& ground() const { return ground_; }
  int rank(Subset x) const;
  const std::vector<Subset>& bases() const { return bases_; }

 private:
  GroundSet ground_;
  std::vector<Subset> bases_;
};

SupermodularInstance orientation_instance(const MultiGraph& g);

/// Initial orientation: every edge into its higher-index endpoint.
Orientation initial_orientation(const MultiGraph& g);

struct OrientationResult {
  Orientation orientation;
  IntVector in_degrees;
};

/// Reverses dipaths s -> t while some in-degree gap rho(t) >= rho(s) + 2 has one.
OrientationResult decmin_orientation(const MultiGraph& g);

/// An orientation whose in-degree vector is m; kInfeasible when m is not a member.
Orientation orientation_from_indegrees(const MultiGraph& g, const IntVector& m);

SupermodularInstance semimatching_instance(const BipartiteGraph& h);

/// p(X) = k (r(S) - r(S - X)), truncated to the box [0, k].
SupermodularInstance kbases_instance(const ExplicitMatroid& m, int k);

}  // namespace decmin
