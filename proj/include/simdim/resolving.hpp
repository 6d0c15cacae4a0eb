#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace simdim {

struct SolverOptions {
  uint64_t budget = 100'000'000;  // candidate-check cap per solve
};

// True when every pair of distinct vertices gets distinct distance vectors to
// S in every member of the family, under metric m.  All pairs are compared,
// members of S included (they are resolved for free by their zero entry).
// Full metric requires every member to be connected.
bool is_generator(const GraphFamily& f, MetricSelector m, const VertexSet& s);

// One mask per (member, vertex pair): the vertices whose distance vectors
// separate that pair.  S is a simultaneous generator exactly when it meets
// every mask.  Unreduced; the solver dedupes internally.
std::vector<uint64_t> pair_distinguisher_masks(const GraphFamily& f, MetricSelector m);

struct MinResult {
  int k = 0;
  VertexSet witness;  // lexicographically first minimum generator
};

// Exact simultaneous dimension of the family under m, by cardinality-
// increasing subset search with twin-class pruning; see subset_search.hpp for
// the kernel and its determinism contract.
MinResult min_generator(const GraphFamily& f, MetricSelector m, const SolverOptions& opt = {});

int metric_dimension(const Graph& g, const SolverOptions& opt = {});     // Full metric
int adjacency_dimension(const Graph& g, const SolverOptions& opt = {});  // Truncated(2)

struct BasisCatalog {
  int dimension = 0;
  std::vector<VertexSet> bases;  // every minimum generator, lexicographic
};

BasisCatalog enumerate_bases(const GraphFamily& f, MetricSelector m, const SolverOptions& opt = {});

// Maximal classes of vertices sharing a neighbourhood: open (false twins) or
// closed (true twins).  Classes of size 1 are omitted.  Any generator misses
// at most one vertex of each class, which is what the solver prunes on.
struct TwinClass {
  VertexSet members;
  bool closed = false;  // true twins share N[v], false twins share N(v)
};

std::vector<TwinClass> twin_classes(const Graph& g);

bool is_dominating(const Graph& g, const VertexSet& s);
int domination_number(const Graph& g, const SolverOptions& opt = {});
int simultaneous_domination_number(const GraphFamily& f, const SolverOptions& opt = {});

// min over vertices v of the domination number of g with v deleted.
// Needs order >= 2.
int gamma_prime(const Graph& g, const SolverOptions& opt = {});

// Facts about the minimum simultaneous adjacency generators of a family,
// computed from the full basis catalog under Truncated(2).  "Trapped" means
// the basis lies inside some member's open neighbourhood N_H(v); such a v is
// automatically outside the basis.
struct PremiseProfile {
  int sd_a = 0;
  int basis_count = 0;
  int dominating_basis_count = 0;  // bases dominating every member
  bool exists_dominating_basis = false;
  bool exists_basis_never_inside_neighbourhood = false;
  bool all_dominating_bases_trapped = true;  // vacuously true with no dominating basis

  std::optional<VertexSet> dominating_witness;
  std::optional<VertexSet> never_inside_witness;
  std::optional<VertexSet> untrapped_dominating_witness;
  // For the first trapped dominating basis: which member and vertex trap it.
  std::optional<VertexSet> trapped_dominating_witness;
  int trap_member = -1;
  int trap_vertex = -1;
};

PremiseProfile premise_profile(const GraphFamily& f, const SolverOptions& opt = {});

// Runs of consecutive non-members of B around the cycle on n vertices
// (indices 0..n-1 in ring order).  B must be a proper nonempty subset.
struct GapProfile {
  int gaps_1 = 0;
  int gaps_2 = 0;
  int gaps_3 = 0;
  int longest = 0;  // 0 when B is the whole ring
  std::vector<int> lengths;  // every gap, in ring order from the first member
};

GapProfile gap_profile(int n, const VertexSet& b);

}  // namespace simdim
