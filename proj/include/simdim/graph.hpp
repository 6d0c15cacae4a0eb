#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace simdim {

// Vertices are indices 0..n-1 with n <= 64, so vertex sets and adjacency rows
// are single 64-bit masks throughout.
inline constexpr int kMaxVertices = 64;

// Sentinel distance for unreachable pairs under the full metric.  Compares
// greater than any finite distance; never used in arithmetic.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Sentinel girth for acyclic graphs.  Compares greater than any finite bound.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

inline uint64_t full_mask(int n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

inline uint64_t bit(int v) { return uint64_t{1} << v; }

// A set of vertices of a graph of order n.  Wraps the raw mask so call sites
// stay readable; hot loops work on .bits directly.
struct VertexSet {
  int n = 0;
  uint64_t bits = 0;

  bool contains(int v) const { return (bits >> v) & 1; }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  void add(int v) { bits |= bit(v); }
  void remove(int v) { bits &= ~bit(v); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  bool operator==(const VertexSet&) const = default;
};

// Orders equal-cardinality sets by their sorted element sequences.  The vertex
// whose membership differs first decides.
inline bool lex_less(uint64_t a, uint64_t b) {
  uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & ~(d - 1))) != 0;
}

// Simple finite graph: no loops, no multi-edges.  Treated as immutable once
// built; every operation returns a fresh graph.
//
// labels carries the display label of each vertex, ascending.  Graphs built in
// code use identity labels; graphs read from files keep whatever labels the
// file used (see io.hpp).  All structural algorithms work on indices only.
struct Graph {
  std::string name;
  int n = 0;
  std::vector<uint64_t> adj;  // adj[v] = open neighbourhood mask
  std::vector<int> labels;

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  int degree(int v) const { return std::popcount(adj[v]); }
  uint64_t vertex_mask() const { return full_mask(n); }
  uint64_t closed_neighbourhood(int v) const { return adj[v] | bit(v); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }

  // Edges as (min,max) index pairs, sorted.
  std::vector<std::pair<int, int>> edges() const;
};

// Builds a graph with identity labels from an edge list.  Validates indices
// and rejects loops.
Graph make_graph(std::string name, int n, const std::vector<std::pair<int, int>>& edges);

Graph path_graph(int n);      // edges {i,i+1}
Graph cycle_graph(int n);     // path plus {n-1,0}; n >= 3
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite_graph(int r, int s);  // parts {0..r-1} and {r..r+s-1}

// Disjoint union: H's vertices appear shifted by G.n.  Throws
// capacity_exceeded past 64 vertices.  Labels reset to identity.
Graph disjoint_union(const Graph& g, const Graph& h);

// Complement on the same vertex set; labels are preserved.
Graph complement(const Graph& g);

// A family of graphs over a common vertex set.  Order matters and duplicates
// are allowed.  Constructed via family_of / io loaders, which enforce the
// common order.
struct GraphFamily {
  int n = 0;
  std::vector<Graph> members;

  bool empty() const { return members.empty(); }
  size_t size() const { return members.size(); }
};

GraphFamily family_of(std::vector<Graph> members);

// Which distance the resolving machinery sees: the full shortest-path metric,
// or d_t(x,y) = min(d(x,y), t) which is always finite.  t = 2 is the
// adjacency metric.
struct MetricSelector {
  bool full = true;
  int t = 0;

  static MetricSelector Full() { return {true, 0}; }
  static MetricSelector Truncated(int t);
  static MetricSelector Adjacency() { return Truncated(2); }

  bool operator==(const MetricSelector&) const = default;
};

// Dense distance table.  Under Full, unreachable pairs hold kUnreachable;
// under Truncated(t) every entry is at most t and unreachable pairs hold
// exactly t.
struct MetricTable {
  int n = 0;
  std::vector<int> d;

  int at(int i, int j) const { return d[size_t(i) * n + j]; }
  int& at(int i, int j) { return d[size_t(i) * n + j]; }
};

MetricTable metric_table(const Graph& g, MetricSelector m);

bool is_connected(const Graph& g);

// Largest finite distance, or kUnreachable if the graph is disconnected.
int diameter(const Graph& g);

// Length of a shortest cycle, or kInfiniteGirth for forests.
int girth(const Graph& g);

}  // namespace simdim
