#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace simdim {

// A vertex permutation, img[v] = image of v.
struct Permutation {
  std::vector<int> img;

  int apply(int v) const { return img[v]; }
  uint64_t apply_mask(uint64_t m) const {
    uint64_t out = 0;
    while (m) {
      out |= bit(img[std::countr_zero(m)]);
      m &= m - 1;
    }
    return out;
  }
};

// Relabel g by f: edge {u,v} becomes {f(u),f(v)}.  Labels reset to identity.
Graph apply_permutation(const Graph& g, const Permutation& f);

uint64_t factorial_capped(int m);  // saturates at UINT64_MAX

// Permutations fixing b pointwise and free on the rest, in lexicographic
// order of the image tuple over the free positions (ascending).  When the
// stabilizer order exceeds `limit`, switches to seeded sampling of `limit`
// permutations instead; full enumeration always starts with the identity.
std::vector<Permutation> stabilizer_enumerate(int n, const VertexSet& b, uint64_t limit,
                                              uint64_t seed = 0);

// Membership of gp in the class of graphs whose members look like g around b
// under the relabeling f: every vertex x of b must satisfy
// N_gp(x) = f(N_g(x)).  f must belong to the stabilizer of b.
bool is_member_with(const Graph& gp, const Graph& g, const VertexSet& b, const Permutation& f);

// Membership in the union over the whole stabilizer: returns the first
// relabeling (in enumeration order) that certifies gp, or nullopt.  Throws
// budget_exceeded when the stabilizer order exceeds the budget.
std::optional<Permutation> is_member(const Graph& gp, const Graph& g, const VertexSet& b,
                                     uint64_t budget = 1'000'000);

enum class SampleMode {
  relabel,       // members are f(g); isomorphic to g by construction
  free_outside,  // additionally rerandomizes edges with both ends outside b
};

// Seeded family of `count` members of the class generated by (g, b); g itself
// is always the first member.
GraphFamily sample_members(const Graph& g, const VertexSet& b, SampleMode mode, uint64_t seed,
                           int count);

// Subgraph on the closed neighbourhood of b keeping only edges with at least
// one endpoint in b.  Vertices come out compacted in index order, carrying
// their previous display labels.  Shared up to isomorphism by every member
// of the class generated by (g, b).
Graph weakly_induced(const Graph& g, const VertexSet& b);

// Exact isomorphism test by degree-pruned backtracking; intended for the
// weakly induced subgraphs above.  Orders above 10 throw budget_exceeded.
bool small_iso(const Graph& a, const Graph& b);

}  // namespace simdim
