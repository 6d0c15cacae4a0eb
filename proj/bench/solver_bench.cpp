// Times the production search (mask reduction, forced-pair lower bounds,
// parallel scan) against the plain serial reference on a fixed set of
// instances and checks that both return the same size and the same witness.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "simdim/products.hpp"
#include "simdim/reference.hpp"
#include "simdim/resolving.hpp"

using namespace simdim;

namespace {

struct Instance {
  std::string label;
  GraphFamily family;
  MetricSelector metric;
};

Graph random_connected(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < 0.25) edges.emplace_back(u, v);
    Graph g = make_graph("R" + std::to_string(seed), n, edges);
    if (is_connected(g)) return g;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  SolverOptions opt;
  std::vector<Instance> instances;

  instances.push_back({"adjacency C13", family_of({cycle_graph(13)}), MetricSelector::Adjacency()});
  instances.push_back({"adjacency {P12,C12}", family_of({path_graph(12), cycle_graph(12)}),
                       MetricSelector::Adjacency()});
  instances.push_back({"adjacency K2*{P7} corona",
                       family_corona(family_of({complete_graph(2)}), family_of({path_graph(7)})),
                       MetricSelector::Adjacency()});
  instances.push_back({"adjacency C4*{N1+K2} corona",
                       family_corona(family_of({cycle_graph(4)}),
                                     family_of({disjoint_union(empty_graph(1), complete_graph(2))})),
                       MetricSelector::Adjacency()});
  for (uint64_t seed : {7u, 19u})
    instances.push_back({"full random n=18 seed=" + std::to_string(seed),
                         family_of({random_connected(18, seed)}), MetricSelector::Full()});

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("%-32s %4s %3s %12s %12s %8s\n", "instance", "n", "k", "reference_s",
              "production_s", "speedup");

  bool all_match = true;
  for (const Instance& inst : instances) {
    auto t0 = std::chrono::steady_clock::now();
    MinResult ref = reference_min_generator(inst.family, inst.metric, opt);
    double ref_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    MinResult prod = min_generator(inst.family, inst.metric, opt);
    double prod_s = seconds_since(t0);

    bool match = ref.k == prod.k && ref.witness == prod.witness;
    all_match = all_match && match;
    std::printf("%-32s %4d %3d %12.4f %12.4f %7.1fx %s\n", inst.label.c_str(), inst.family.n,
                prod.k, ref_s, prod_s, prod_s > 0 ? ref_s / prod_s : 0.0,
                match ? "" : "MISMATCH");
  }

  if (!all_match) {
    std::printf("solver outputs disagree\n");
    return 1;
  }
  return 0;
}
