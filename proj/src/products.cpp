#include "simdim/products.hpp"

namespace simdim {

// The construction itself is defined for any orders; the theorem checks
// enforce their own stronger hypotheses (connected nontrivial first factor).
static void check_corona_operands(const Graph& g, const Graph& h) {
  if (g.n < 1 || h.n < 1)
    throw Error(Error::invalid_parameter, "corona operands must be nonempty");
  if (g.n * (h.n + 1) > kMaxVertices)
    throw Error(Error::capacity_exceeded, "corona of " + g.name + " and " + h.name +
                                              " exceeds 64 vertices");
}

CoronaLayout corona_layout(const Graph& g, const Graph& h) {
  check_corona_operands(g, h);
  return CoronaLayout{g.n, h.n};
}

Graph corona(const Graph& g, const Graph& h) {
  CoronaLayout lay = corona_layout(g, h);
  Graph p;
  p.name = g.name + "_odot_" + h.name;
  p.n = lay.order();
  p.adj.assign(p.n, 0);
  p.labels.resize(p.n);
  for (int i = 0; i < p.n; ++i) p.labels[i] = i;
  for (int i = 0; i < g.n; ++i) p.adj[lay.root(i)] = g.adj[i];
  for (int i = 0; i < g.n; ++i) {
    uint64_t root_bit = bit(lay.root(i));
    for (int a = 0; a < h.n; ++a) {
      int v = lay.copy(i, a);
      p.adj[v] = (h.adj[a] << (g.n + i * h.n)) | root_bit;
      p.adj[lay.root(i)] |= bit(v);
    }
  }
  return p;
}

Graph join(const Graph& g, const Graph& h) {
  Graph p = disjoint_union(g, h);
  p.name = g.name + "_plus_" + h.name;
  uint64_t left = full_mask(g.n);
  uint64_t right = full_mask(p.n) & ~left;
  for (int v = 0; v < g.n; ++v) p.adj[v] |= right;
  for (int v = g.n; v < p.n; ++v) p.adj[v] |= left;
  return p;
}

GraphFamily family_corona(const GraphFamily& gs, const GraphFamily& hs) {
  if (gs.empty() || hs.empty())
    throw Error(Error::invalid_parameter, "corona needs nonempty families");
  std::vector<Graph> members;
  for (const Graph& g : gs.members)
    for (const Graph& h : hs.members) members.push_back(corona(g, h));
  return family_of(std::move(members));
}

GraphFamily family_join(const GraphFamily& gs, const GraphFamily& hs) {
  if (gs.empty() || hs.empty())
    throw Error(Error::invalid_parameter, "join needs nonempty families");
  std::vector<Graph> members;
  for (const Graph& g : gs.members)
    for (const Graph& h : hs.members) members.push_back(join(g, h));
  return family_of(std::move(members));
}

}  // namespace simdim
