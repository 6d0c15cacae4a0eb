#include "simdim/families.hpp"

#include <algorithm>
#include <random>

namespace simdim {

Graph apply_permutation(const Graph& g, const Permutation& f) {
  if (int(f.img.size()) != g.n)
    throw Error(Error::invalid_parameter, "permutation size mismatch");
  Graph out;
  out.name = g.name + "_relabeled";
  out.n = g.n;
  out.adj.assign(g.n, 0);
  out.labels.resize(g.n);
  for (int i = 0; i < g.n; ++i) out.labels[i] = i;
  for (int v = 0; v < g.n; ++v) out.adj[f.img[v]] = f.apply_mask(g.adj[v]);
  return out;
}

uint64_t factorial_capped(int m) {
  uint64_t r = 1;
  for (int i = 2; i <= m; ++i) {
    if (r > UINT64_MAX / uint64_t(i)) return UINT64_MAX;
    r *= uint64_t(i);
  }
  return r;
}

namespace {

std::vector<int> free_positions(int n, const VertexSet& b) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!b.contains(v)) out.push_back(v);
  return out;
}

Permutation assemble(int n, const std::vector<int>& free, const std::vector<int>& image) {
  Permutation f;
  f.img.resize(n);
  for (int v = 0; v < n; ++v) f.img[v] = v;
  for (size_t i = 0; i < free.size(); ++i) f.img[free[i]] = image[i];
  return f;
}

void check_basis_range(int n, const VertexSet& b) {
  if (b.n != n || (b.bits & ~full_mask(n)))
    throw Error(Error::invalid_parameter, "vertex set does not fit the graph order");
}

}  // namespace

std::vector<Permutation> stabilizer_enumerate(int n, const VertexSet& b, uint64_t limit,
                                              uint64_t seed) {
  check_basis_range(n, b);
  if (limit == 0) throw Error(Error::invalid_parameter, "stabilizer limit must be positive");
  std::vector<int> free = free_positions(n, b);
  std::vector<Permutation> out;
  if (factorial_capped(int(free.size())) <= limit) {
    std::vector<int> image = free;
    do {
      out.push_back(assemble(n, free, image));
    } while (std::next_permutation(image.begin(), image.end()));
  } else {
    std::mt19937_64 rng(seed);
    std::vector<int> image = free;
    for (uint64_t i = 0; i < limit; ++i) {
      std::shuffle(image.begin(), image.end(), rng);
      out.push_back(assemble(n, free, image));
    }
  }
  return out;
}

bool is_member_with(const Graph& gp, const Graph& g, const VertexSet& b, const Permutation& f) {
  if (gp.n != g.n) throw Error(Error::invalid_parameter, "order mismatch");
  check_basis_range(g.n, b);
  if (int(f.img.size()) != g.n)
    throw Error(Error::invalid_parameter, "permutation size mismatch");
  for (int v : b.elements())
    if (f.img[v] != v)
      throw Error(Error::invalid_parameter, "relabeling must fix the anchor set pointwise");
  for (int x : b.elements())
    if (gp.adj[x] != f.apply_mask(g.adj[x])) return false;
  return true;
}

std::optional<Permutation> is_member(const Graph& gp, const Graph& g, const VertexSet& b,
                                     uint64_t budget) {
  if (gp.n != g.n) throw Error(Error::invalid_parameter, "order mismatch");
  check_basis_range(g.n, b);
  std::vector<int> free = free_positions(g.n, b);
  if (factorial_capped(int(free.size())) > budget)
    throw Error(Error::budget_exceeded,
                "stabilizer of " + std::to_string(free.size()) + " free vertices exceeds budget");
  std::vector<int> image = free;
  do {
    Permutation f = assemble(g.n, free, image);
    if (is_member_with(gp, g, b, f)) return f;
  } while (std::next_permutation(image.begin(), image.end()));
  return std::nullopt;
}

GraphFamily sample_members(const Graph& g, const VertexSet& b, SampleMode mode, uint64_t seed,
                           int count) {
  check_basis_range(g.n, b);
  if (count < 1) throw Error(Error::invalid_parameter, "member count must be positive");
  std::vector<int> free = free_positions(g.n, b);
  std::mt19937_64 rng(seed);
  std::vector<Graph> members;
  members.push_back(g);
  std::vector<int> image = free;
  for (int i = 1; i < count; ++i) {
    std::shuffle(image.begin(), image.end(), rng);
    Graph m = apply_permutation(g, assemble(g.n, free, image));
    if (mode == SampleMode::free_outside) {
      for (size_t a = 0; a < free.size(); ++a)
        for (size_t c = a + 1; c < free.size(); ++c) {
          int u = free[a], v = free[c];
          bool on = rng() & 1;
          if (on) {
            m.adj[u] |= bit(v);
            m.adj[v] |= bit(u);
          } else {
            m.adj[u] &= ~bit(v);
            m.adj[v] &= ~bit(u);
          }
        }
    }
    m.name = g.name + "_m" + std::to_string(i);
    m.labels = g.labels;
    members.push_back(std::move(m));
  }
  return family_of(std::move(members));
}

Graph weakly_induced(const Graph& g, const VertexSet& b) {
  check_basis_range(g.n, b);
  if (b.bits == 0) throw Error(Error::invalid_parameter, "anchor set must be nonempty");
  uint64_t keep = b.bits;
  for (int v : b.elements()) keep |= g.closed_neighbourhood(v);
  std::vector<int> order;
  for (uint64_t m = keep; m; m &= m - 1) order.push_back(std::countr_zero(m));
  std::vector<int> compact(g.n, -1);
  for (size_t i = 0; i < order.size(); ++i) compact[order[i]] = int(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (b.contains(u) || b.contains(v)) edges.emplace_back(compact[u], compact[v]);
  Graph out = make_graph(g.name + "_w", int(order.size()), edges);
  for (size_t i = 0; i < order.size(); ++i) out.labels[i] = g.labels[order[i]];
  return out;
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map, uint64_t used, int v) {
  if (v == a.n) return true;
  for (int u = 0; u < b.n; ++u) {
    if ((used >> u) & 1) continue;
    if (a.degree(v) != b.degree(u)) continue;
    bool ok = true;
    for (int w = 0; w < v; ++w)
      if (a.has_edge(v, w) != b.has_edge(u, map[w])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[v] = u;
    if (extend_iso(a, b, map, used | bit(u), v + 1)) return true;
  }
  return false;
}

}  // namespace

bool small_iso(const Graph& a, const Graph& b) {
  if (a.n > 10 || b.n > 10)
    throw Error(Error::budget_exceeded, "isomorphism check is limited to order 10");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(a.n, -1);
  return extend_iso(a, b, map, 0, 0);
}

}  // namespace simdim
