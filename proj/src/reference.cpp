#include "simdim/reference.hpp"

#include "simdim/subset_search.hpp"

namespace simdim {

namespace {

bool resolves_all(const std::vector<MetricTable>& tables, int n, uint64_t s) {
  for (const MetricTable& t : tables)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool separated = false;
        for (uint64_t m = s; m; m &= m - 1) {
          int x = std::countr_zero(m);
          if (t.at(x, u) != t.at(x, v)) {
            separated = true;
            break;
          }
        }
        if (!separated) return false;
      }
  return true;
}

// Plain lexicographic odometer over all k-subsets of 0..n-1.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k == 0) {
    fn(uint64_t{0});
    return;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    uint64_t s = 0;
    for (int i = 0; i < k; ++i) s |= bit(idx[i]);
    if (!fn(s)) return;
    int j = k - 1;
    while (j >= 0 && idx[j] == n - k + j) --j;
    if (j < 0) return;
    ++idx[j];
    for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
}

void charge_level(uint64_t& used, int n, int k, uint64_t budget) {
  uint64_t amount = binomial(n, k);
  uint64_t next = used > UINT64_MAX - amount ? UINT64_MAX : used + amount;
  if (next > budget)
    throw Error(Error::budget_exceeded, "reference scan exceeds candidate budget at k=" +
                                            std::to_string(k));
  used = next;
}

}  // namespace

MinResult reference_min_generator(const GraphFamily& f, MetricSelector m,
                                  const SolverOptions& opt) {
  if (f.empty()) throw Error(Error::invalid_parameter, "empty family");
  std::vector<MetricTable> tables;
  for (const Graph& g : f.members) {
    if (m.full && !is_connected(g))
      throw Error(Error::unsupported_metric,
                  "full metric needs connected graphs; " + g.name + " is disconnected");
    tables.push_back(metric_table(g, m));
  }
  uint64_t used = 0;
  for (int k = 0; k <= f.n; ++k) {
    charge_level(used, f.n, k, opt.budget);
    uint64_t witness = 0;
    bool found = false;
    for_each_subset(f.n, k, [&](uint64_t s) {
      if (resolves_all(tables, f.n, s)) {
        witness = s;
        found = true;
        return false;
      }
      return true;
    });
    if (found) return {k, VertexSet{f.n, witness}};
  }
  throw Error(Error::invalid_parameter, "no generator found");  // unreachable: V resolves itself
}

std::vector<VertexSet> reference_bases(const GraphFamily& f, MetricSelector m,
                                       const SolverOptions& opt) {
  MinResult r = reference_min_generator(f, m, opt);
  std::vector<MetricTable> tables;
  for (const Graph& g : f.members) tables.push_back(metric_table(g, m));
  std::vector<VertexSet> out;
  for_each_subset(f.n, r.k, [&](uint64_t s) {
    if (resolves_all(tables, f.n, s)) out.push_back(VertexSet{f.n, s});
    return true;
  });
  return out;
}

int reference_domination_number(const Graph& g, const SolverOptions& opt) {
  if (g.n == 0) throw Error(Error::invalid_parameter, "domination needs a nonempty graph");
  uint64_t used = 0;
  for (int k = 0; k <= g.n; ++k) {
    charge_level(used, g.n, k, opt.budget);
    int found = -1;
    for_each_subset(g.n, k, [&](uint64_t s) {
      if (is_dominating(g, VertexSet{g.n, s})) {
        found = k;
        return false;
      }
      return true;
    });
    if (found >= 0) return found;
  }
  return g.n;
}

}  // namespace simdim
