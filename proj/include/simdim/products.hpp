#pragma once

#include "graph.hpp"

namespace simdim {

// Index layout of a corona product G (.) H with |G| = n, |H| = np:
// roots keep G's indices, copy i occupies a contiguous block after them.
struct CoronaLayout {
  int n = 0;   // order of G
  int np = 0;  // order of H

  int root(int i) const { return i; }
  int copy(int i, int a) const { return n + i * np + a; }
  int order() const { return n * (np + 1); }

  bool is_root(int v) const { return v < n; }
  int copy_of(int v) const { return (v - n) / np; }      // non-root v only
  int within_copy(int v) const { return (v - n) % np; }  // non-root v only
  uint64_t copy_mask(int i) const { return full_mask(np) << (n + i * np); }
};

// Corona product: one copy of H per vertex of G, each copy joined to its
// root.  G must be nontrivial connected, H nontrivial (connectivity free).
Graph corona(const Graph& g, const Graph& h);
CoronaLayout corona_layout(const Graph& g, const Graph& h);

// Join: disjoint union plus all edges between the two sides.  H's vertices
// are shifted by G's order.
Graph join(const Graph& g, const Graph& h);

// Family lift of either product: one member per (G, H) pair, G-major order.
// Corona members share the layout above; join members share the shifted
// vertex set.
GraphFamily family_corona(const GraphFamily& gs, const GraphFamily& hs);
GraphFamily family_join(const GraphFamily& gs, const GraphFamily& hs);

}  // namespace simdim
