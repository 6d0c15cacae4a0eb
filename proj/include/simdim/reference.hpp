#pragma once

#include "resolving.hpp"

namespace simdim {

// Pruning-free serial solvers kept as the reference the production kernels
// are validated against.  They scan every subset cardinality-increasing in
// lexicographic order and test candidates straight off the definition
// (distance-vector comparison / closed-neighbourhood cover), sharing nothing
// with the hitting-set reduction except the distance tables.

MinResult reference_min_generator(const GraphFamily& f, MetricSelector m,
                                  const SolverOptions& opt = {});

std::vector<VertexSet> reference_bases(const GraphFamily& f, MetricSelector m,
                                       const SolverOptions& opt = {});

int reference_domination_number(const Graph& g, const SolverOptions& opt = {});

}  // namespace simdim
