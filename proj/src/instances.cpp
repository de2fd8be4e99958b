#include "decmin/instances.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>

namespace decmin {

MultiGraph::MultiGraph(GroundSet n, std::vector<std::pair<int, int>> e)
    : nodes(std::move(n)), edges(std::move(e)) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= nodes.size() || v >= nodes.size())
      throw Error(ErrorKind::kParse, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::kParse, "self-loop at '" + nodes.name(u) + "' is not supported");
  }
}

int MultiGraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [v](auto e) { return e.first == v || e.second == v; }));
}

IntVector Orientation::in_degrees(const MultiGraph& g) const {
  IntVector rho(g.nodes.size(), 0);
  for (int h : head) rho[h] += 1;
  return rho;
}

BipartiteGraph::BipartiteGraph(GroundSet l, std::vector<std::string> r,
                               std::vector<std::vector<int>> adj)
    : left(std::move(l)), right(std::move(r)), adjacency(std::move(adj)) {
  if (adjacency.size() != right.size())
    throw Error(ErrorKind::kParse, "one adjacency list per right node required");
  for (std::size_t t = 0; t < right.size(); ++t) {
    if (adjacency[t].empty())
      throw Error(ErrorKind::kInfeasible, "right node '" + right[t] + "' has no neighbour");
    for (int s : adjacency[t])
      if (s < 0 || s >= left.size()) throw Error(ErrorKind::kParse, "neighbour out of range");
  }
}

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

int forest_rank(int node_count, const std::vector<std::pair<int, int>>& edges, Subset x) {
  std::vector<int> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  int rank = 0;
  for (int e : x.elements()) {
    int a = find_root(parent, edges[e].first), b = find_root(parent, edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

ExplicitMatroid ExplicitMatroid::from_bases(GroundSet ground, std::vector<Subset> bases) {
  if (bases.empty()) throw Error(ErrorKind::kParse, "matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (Subset b : bases) {
    if (!b.subset_of(ground.full()) || b.size() != bases.front().size())
      throw Error(ErrorKind::kParse, "bases must be equicardinal subsets of the ground set");
  }
  auto is_basis = [&](Subset b) { return std::binary_search(bases.begin(), bases.end(), b); };
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : (b1 - b2).elements()) {
        bool ok = false;
        for (int y : (b2 - b1).elements()) ok = ok || is_basis(b1.without(x).with(y));
        if (!ok) throw Error(ErrorKind::kParse, "basis exchange axiom fails");
      }
  ExplicitMatroid m;
  m.ground_ = std::move(ground);
  m.bases_ = std::move(bases);
  return m;
}

ExplicitMatroid ExplicitMatroid::graphic(int node_count, std::vector<std::pair<int, int>> edges,
                                         GroundSet edge_names) {
  if (static_cast<int>(edges.size()) != edge_names.size())
    throw Error(ErrorKind::kParse, "one name per edge required");
  if (edge_names.size() > 24) throw Error(ErrorKind::kScanTooLarge, "graphic matroid too large");
  const Subset all = edge_names.full();
  const int r = forest_rank(node_count, edges, all);
  std::vector<Subset> bases;
  for (Mask k = 0; k <= all.mask; ++k) {
    Subset x(k);
    if (x.size() == r && forest_rank(node_count, edges, x) == r) bases.push_back(x);
  }
  return from_bases(std::move(edge_names), std::move(bases));
}

int ExplicitMatroid::rank(Subset x) const {
  int best = 0;
  for (Subset b : bases_) best = std::max(best, (b & x).size());
  return best;
}

SupermodularInstance orientation_instance(const MultiGraph& g) {
  std::vector<Mask> edge_masks;
  for (auto [u, v] : g.edges) edge_masks.push_back(Subset::single(u).with(v).mask);
  return SupermodularInstance(
      g.nodes,
      [edge_masks](Subset x) -> ExtInt {
        std::int64_t count = 0;
        for (Mask e : edge_masks) count += (e & ~x.mask) == 0;
        return count;
      },
      "orientation");
}

Orientation initial_orientation(const MultiGraph& g) {
  Orientation o;
  for (auto [u, v] : g.edges) o.head.push_back(std::max(u, v));
  return o;
}

namespace {

// BFS along edge directions from `from`; returns the edge used to reach each node.
std::vector<int> reach_edges(const MultiGraph& g, const Orientation& o, int from) {
  const int n = g.nodes.size();
  std::vector<int> via(n, -2);
  via[from] = -1;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      int h = o.head[e];
      int tail = g.edges[e].first == h ? g.edges[e].second : g.edges[e].first;
      if (tail != u || via[h] != -2) continue;
      via[h] = static_cast<int>(e);
      queue.push_back(h);
    }
  }
  return via;
}

// Reverses the BFS path ending at `to`.
void reverse_path(const MultiGraph& g, Orientation& o, const std::vector<int>& via, int to) {
  for (int v = to; via[v] >= 0;) {
    const int e = via[v];
    const int tail = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
    o.head[e] = tail;
    v = tail;
  }
}

}  // namespace

OrientationResult decmin_orientation(const MultiGraph& g) {
  Orientation o = initial_orientation(g);
  const int n = g.nodes.size();
  for (;;) {
    const IntVector rho = o.in_degrees(g);
    std::optional<std::pair<int, int>> best;  // (s, t)
    std::vector<int> best_via;
    for (int s = 0; s < n; ++s) {
      std::vector<int> via = reach_edges(g, o, s);
      for (int t = 0; t < n; ++t) {
        if (t == s || via[t] == -2 || rho[t] < rho[s] + 2) continue;
        bool better = !best;
        if (best) {
          auto [bs, bt] = *best;
          std::int64_t gap = rho[t] - rho[s], bgap = rho[bt] - rho[bs];
          better = gap > bgap || (gap == bgap && (t < bt || (t == bt && s < bs)));
        }
        if (better) {
          best = std::pair{s, t};
          best_via = via;
        }
      }
    }
    if (!best) return {o, rho};
    reverse_path(g, o, best_via, best->second);
  }
}

Orientation orientation_from_indegrees(const MultiGraph& g, const IntVector& m) {
  const SupermodularInstance inst = orientation_instance(g);
  if (auto mem = is_member(inst, m); !mem)
    throw Error(ErrorKind::kInfeasible,
                "NotMember: in-degree vector violates " + g.nodes.format(*mem.witness));
  Orientation o = initial_orientation(g);
  const int n = g.nodes.size();
  for (;;) {
    const IntVector rho = o.in_degrees(g);
    bool done = true, moved = false;
    for (int u = 0; u < n && !moved; ++u) {
      if (rho[u] >= m[u]) continue;
      done = false;
      std::vector<int> via = reach_edges(g, o, u);
      for (int v = 0; v < n; ++v) {
        if (v != u && via[v] != -2 && rho[v] > m[v]) {
          reverse_path(g, o, via, v);
          moved = true;
          break;
        }
      }
    }
    if (done) return o;
    if (!moved) throw Error(ErrorKind::kInfeasible, "no augmenting dipath; vector is not realizable");
  }
}

SupermodularInstance semimatching_instance(const BipartiteGraph& h) {
  std::vector<Mask> neighbourhoods;
  for (const auto& adj : h.adjacency) {
    Subset nb;
    for (int s : adj) nb = nb.with(s);
    neighbourhoods.push_back(nb.mask);
  }
  return SupermodularInstance(
      h.left,
      [neighbourhoods](Subset x) -> ExtInt {
        std::int64_t count = 0;
        for (Mask nb : neighbourhoods) count += (nb & ~x.mask) == 0;
        return count;
      },
      "bipartite");
}

SupermodularInstance kbases_instance(const ExplicitMatroid& m, int k) {
  if (k < 1) throw Error(ErrorKind::kParse, "k must be positive");
  const Subset all = m.ground().full();
  const int full_rank = m.rank(all);
  SupermodularInstance base(
      m.ground(),
      [m, k, all, full_rank](Subset x) -> ExtInt {
        return static_cast<std::int64_t>(k) * (full_rank - m.rank(all - x));
      },
      "k_bases");
  Box box{std::vector<ExtInt>(m.ground().size(), ExtInt(0)),
          std::vector<ExtInt>(m.ground().size(), ExtInt(k))};
  SupermodularInstance truncated = box_truncate(base, box);
  if (truncated.size() <= 12) {
    SupermodularInstance table = tabulate(truncated);
    return SupermodularInstance(table.ground(), [table](Subset x) { return table(x); }, "k_bases");
  }
  return truncated;
}

}  // namespace decmin
