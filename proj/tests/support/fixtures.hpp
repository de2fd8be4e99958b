#pragma once

#include <string>
#include <vector>

#include "decmin/core.hpp"
#include "decmin/instances.hpp"

namespace fixtures {

using namespace decmin;

inline std::pair<int, int> e(int u, int v) { return {u, v}; }

// Triangle a,b,c with bc doubled.
inline MultiGraph triangle() {
  return MultiGraph(GroundSet({"a", "b", "c"}), {e(0, 1), e(0, 2), e(1, 2), e(1, 2)});
}

// Five parallel ab edges plus the path b-c-d-a.
inline MultiGraph square() {
  std::vector<std::pair<int, int>> edges(5, e(0, 1));
  edges.push_back(e(1, 2));
  edges.push_back(e(2, 3));
  edges.push_back(e(3, 0));
  return MultiGraph(GroundSet({"a", "b", "c", "d"}), edges);
}

// Two 4-fold bundles ab, cd joined through x and y.
inline MultiGraph bundles() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) edges.push_back(e(0, 1));
  for (int i = 0; i < 4; ++i) edges.push_back(e(2, 3));
  for (auto p : {e(0, 4), e(2, 4), e(1, 5), e(3, 5)}) edges.push_back(p);
  return MultiGraph(GroundSet({"a", "b", "c", "d", "x", "y"}), edges);
}

// 4-cycle: every element is value-fixed.
inline MultiGraph cycle4() {
  return MultiGraph(GroundSet({"a", "b", "c", "d"}), {e(0, 1), e(1, 2), e(2, 3), e(3, 0)});
}

inline SupermodularInstance triangle_inst() { return orientation_instance(triangle()); }
inline SupermodularInstance square_inst() { return orientation_instance(square()); }
inline SupermodularInstance bundles_inst() { return orientation_instance(bundles()); }

inline const std::vector<IntVector>& four_points() {
  static const std::vector<IntVector> pts{{2, 3, 3, 1}, {3, 3, 3, 0}, {2, 2, 4, 1}, {3, 2, 4, 0}};
  return pts;
}

inline GroundSet abcd() { return GroundSet({"a", "b", "c", "d"}); }

inline std::string data_file(const std::string& name) { return std::string(DECMIN_DATA_DIR) + "/" + name; }

}  // namespace fixtures
