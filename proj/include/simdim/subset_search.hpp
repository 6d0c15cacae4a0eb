#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace simdim {

// Minimum-hitting-set engine shared by the resolving and domination solvers.
//
// A candidate set S (bitmask over n vertices) is feasible when it intersects
// every requirement mask and satisfies every at-least constraint.  The solver
// scans cardinalities k = lower bound, lower bound + 1, ... and inside each
// cardinality enumerates k-subsets in lexicographic order of their sorted
// element sequences, so the reported witness is the lexicographically first
// minimum solution.
//
// The per-cardinality scan is partitioned across OpenMP workers by the
// leading (smallest) element of the subset.  All subsets with leading element
// a precede all subsets with leading element a+1 in lexicographic order, so
// combining block results reproduces the serial answer exactly, independent
// of thread count and scheduling.
struct HittingProblem {
  int n = 0;
  std::vector<uint64_t> masks;                         // requirement masks, all nonempty
  std::vector<std::pair<uint64_t, int>> at_least;      // (class mask, minimum overlap)
};

struct HitResult {
  int k = 0;
  uint64_t witness = 0;
};

// Number of k-subsets of an n-set; saturates at UINT64_MAX.
uint64_t binomial(int n, int k);

// Drops duplicate and superset masks (hitting a subset implies hitting any
// superset) and sorts by popcount so candidate checks fail fast.
void reduce_masks(std::vector<uint64_t>& masks);

// Greedy packing of pairwise disjoint requirement masks; its size bounds any
// hitting set from below.  Also folds in the at-least constraints.
int hitting_lower_bound(const HittingProblem& p);

// Exact minimum.  budget caps the total number of candidate checks: before a
// cardinality level is scanned, the level's full subset count is charged
// against the budget and budget_exceeded is thrown if it does not fit.  That
// keeps the abort decision independent of scheduling.
HitResult solve_min_hitting(const HittingProblem& p, uint64_t budget);

// All minimum solutions, lexicographically ordered.  k must be the value
// reported by solve_min_hitting.
std::vector<uint64_t> all_min_hitting(const HittingProblem& p, int k, uint64_t budget);

}  // namespace simdim
