#include "simdim/graph.hpp"

#include <algorithm>

namespace simdim {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (uint64_t m = adj[u] & ~(full_mask(u + 1)); m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  std::sort(out.begin(), out.end());
  return out;
}

static std::vector<int> identity_labels(int n) {
  std::vector<int> l(n);
  for (int i = 0; i < n; ++i) l[i] = i;
  return l;
}

Graph make_graph(std::string name, int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw Error(Error::invalid_parameter, "graph order must be non-negative");
  if (n > kMaxVertices)
    throw Error(Error::capacity_exceeded, "graph order is capped at 64, got " + std::to_string(n));
  Graph g;
  g.name = std::move(name);
  g.n = n;
  g.adj.assign(n, 0);
  g.labels = identity_labels(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(Error::invalid_parameter, "edge endpoint out of range in " + g.name);
    if (u == v)
      throw Error(Error::invalid_parameter, "loop edge rejected in " + g.name);
    g.adj[u] |= bit(v);
    g.adj[v] |= bit(u);
  }
  return g;
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph("P" + std::to_string(n), n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Error::invalid_parameter, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return make_graph("C" + std::to_string(n), n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph("K" + std::to_string(n), n, e);
}

Graph empty_graph(int n) { return make_graph("N" + std::to_string(n), n, {}); }

Graph complete_bipartite_graph(int r, int s) {
  if (r < 1 || s < 1) throw Error(Error::invalid_parameter, "bipartite parts must be nonempty");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) e.emplace_back(u, r + v);
  return make_graph("K" + std::to_string(r) + "x" + std::to_string(s), r + s, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices)
    throw Error(Error::capacity_exceeded,
                "union of " + g.name + " and " + h.name + " exceeds 64 vertices");
  Graph u;
  u.name = g.name + "_cup_" + h.name;
  u.n = g.n + h.n;
  u.adj.assign(u.n, 0);
  u.labels = identity_labels(u.n);
  for (int v = 0; v < g.n; ++v) u.adj[v] = g.adj[v];
  for (int v = 0; v < h.n; ++v) u.adj[g.n + v] = h.adj[v] << g.n;
  return u;
}

Graph complement(const Graph& g) {
  Graph c;
  c.name = g.name + "_c";
  c.n = g.n;
  c.adj.assign(g.n, 0);
  c.labels = g.labels;
  uint64_t all = g.vertex_mask();
  for (int v = 0; v < g.n; ++v) c.adj[v] = all & ~g.adj[v] & ~bit(v);
  return c;
}

GraphFamily family_of(std::vector<Graph> members) {
  GraphFamily f;
  if (members.empty()) throw Error(Error::invalid_parameter, "family must be nonempty");
  f.n = members.front().n;
  for (const Graph& g : members)
    if (g.n != f.n)
      throw Error(Error::invalid_parameter,
                  "family members must share one vertex set; " + g.name + " has order " +
                      std::to_string(g.n) + ", expected " + std::to_string(f.n));
  f.members = std::move(members);
  return f;
}

MetricSelector MetricSelector::Truncated(int t) {
  if (t < 1) throw Error(Error::invalid_parameter, "truncation threshold must be >= 1");
  return {false, t};
}

// Level-by-level frontier expansion over adjacency masks; one pass per source.
static void bfs_row(const Graph& g, int src, int* row) {
  for (int j = 0; j < g.n; ++j) row[j] = -1;
  uint64_t seen = bit(src), frontier = seen;
  int depth = 0;
  row[src] = 0;
  while (frontier) {
    ++depth;
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
    next &= ~seen;
    for (uint64_t m = next; m; m &= m - 1) row[std::countr_zero(m)] = depth;
    seen |= next;
    frontier = next;
  }
}

MetricTable metric_table(const Graph& g, MetricSelector m) {
  MetricTable t;
  t.n = g.n;
  t.d.assign(size_t(g.n) * g.n, 0);
  std::vector<int> row(g.n);
  for (int s = 0; s < g.n; ++s) {
    bfs_row(g, s, row.data());
    for (int j = 0; j < g.n; ++j) {
      int d = row[j];
      if (m.full)
        t.at(s, j) = d < 0 ? kUnreachable : d;
      else
        t.at(s, j) = d < 0 ? m.t : std::min(d, m.t);
    }
  }
  return t;
}

bool is_connected(const Graph& g) {
  if (g.n <= 1) return true;
  uint64_t seen = bit(0), frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertex_mask();
}

int diameter(const Graph& g) {
  if (!is_connected(g)) return kUnreachable;
  MetricTable t = metric_table(g, MetricSelector::Full());
  int d = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) d = std::max(d, t.at(i, j));
  return d;
}

int girth(const Graph& g) {
  // Shortest cycle through edge {u,v} = 1 + shortest u-v path avoiding that
  // edge.  Minimising over edges hits every cycle.
  int best = kInfiniteGirth;
  std::vector<int> dist(g.n);
  for (auto [u, v] : g.edges()) {
    for (int j = 0; j < g.n; ++j) dist[j] = -1;
    dist[u] = 0;
    uint64_t seen = bit(u), frontier = seen;
    int depth = 0;
    while (frontier && dist[v] < 0) {
      ++depth;
      uint64_t next = 0;
      for (uint64_t m = frontier; m; m &= m - 1) {
        int x = std::countr_zero(m);
        uint64_t out = g.adj[x];
        if (x == u) out &= ~bit(v);
        if (x == v) out &= ~bit(u);
        next |= out;
      }
      next &= ~seen;
      for (uint64_t m = next; m; m &= m - 1) dist[std::countr_zero(m)] = depth;
      seen |= next;
      frontier = next;
    }
    if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
  }
  return best;
}

}  // namespace simdim
