#include "simdim/resolving.hpp"

#include <algorithm>
#include <map>

#include "simdim/subset_search.hpp"

namespace simdim {

namespace {

void require_metric_support(const GraphFamily& f, MetricSelector m) {
  if (!m.full) return;
  for (const Graph& g : f.members)
    if (!is_connected(g))
      throw Error(Error::unsupported_metric,
                  "full metric needs connected graphs; " + g.name + " is disconnected");
}

std::vector<MetricTable> member_tables(const GraphFamily& f, MetricSelector m) {
  require_metric_support(f, m);
  std::vector<MetricTable> t;
  t.reserve(f.size());
  for (const Graph& g : f.members) t.push_back(metric_table(g, m));
  return t;
}

// Mask of vertices whose distance vectors separate u and v in this table.
// Never empty: u itself is always in it.
uint64_t distinguisher_mask(const MetricTable& t, int u, int v) {
  uint64_t m = 0;
  for (int s = 0; s < t.n; ++s)
    if (t.at(s, u) != t.at(s, v)) m |= bit(s);
  return m;
}

HittingProblem resolving_problem(const GraphFamily& f, MetricSelector m) {
  HittingProblem p;
  p.n = f.n;
  std::vector<MetricTable> tables = member_tables(f, m);
  for (const MetricTable& t : tables)
    for (int u = 0; u < f.n; ++u)
      for (int v = u + 1; v < f.n; ++v) p.masks.push_back(distinguisher_mask(t, u, v));
  reduce_masks(p.masks);
  std::map<uint64_t, int> need;
  for (const Graph& g : f.members)
    for (const TwinClass& c : twin_classes(g)) {
      int& slot = need[c.members.bits];
      slot = std::max(slot, c.members.count() - 1);
    }
  for (auto [mask, cnt] : need) p.at_least.emplace_back(mask, cnt);
  return p;
}

void check_family_nonempty(const GraphFamily& f) {
  if (f.empty()) throw Error(Error::invalid_parameter, "empty family");
}

}  // namespace

bool is_generator(const GraphFamily& f, MetricSelector m, const VertexSet& s) {
  check_family_nonempty(f);
  if (s.n != f.n) throw Error(Error::invalid_parameter, "vertex set order mismatch");
  std::vector<MetricTable> tables = member_tables(f, m);
  std::vector<int> probes = s.elements();
  for (const MetricTable& t : tables)
    for (int u = 0; u < f.n; ++u)
      for (int v = u + 1; v < f.n; ++v) {
        bool separated = false;
        for (int x : probes)
          if (t.at(x, u) != t.at(x, v)) {
            separated = true;
            break;
          }
        if (!separated) return false;
      }
  return true;
}

std::vector<uint64_t> pair_distinguisher_masks(const GraphFamily& f, MetricSelector m) {
  check_family_nonempty(f);
  std::vector<uint64_t> out;
  for (const MetricTable& t : member_tables(f, m))
    for (int u = 0; u < f.n; ++u)
      for (int v = u + 1; v < f.n; ++v) out.push_back(distinguisher_mask(t, u, v));
  return out;
}

MinResult min_generator(const GraphFamily& f, MetricSelector m, const SolverOptions& opt) {
  check_family_nonempty(f);
  HittingProblem p = resolving_problem(f, m);
  HitResult r = solve_min_hitting(p, opt.budget);
  return {r.k, VertexSet{f.n, r.witness}};
}

int metric_dimension(const Graph& g, const SolverOptions& opt) {
  return min_generator(family_of({g}), MetricSelector::Full(), opt).k;
}

int adjacency_dimension(const Graph& g, const SolverOptions& opt) {
  return min_generator(family_of({g}), MetricSelector::Adjacency(), opt).k;
}

BasisCatalog enumerate_bases(const GraphFamily& f, MetricSelector m, const SolverOptions& opt) {
  check_family_nonempty(f);
  HittingProblem p = resolving_problem(f, m);
  HitResult r = solve_min_hitting(p, opt.budget);
  BasisCatalog cat;
  cat.dimension = r.k;
  for (uint64_t w : all_min_hitting(p, r.k, opt.budget)) cat.bases.push_back(VertexSet{f.n, w});
  return cat;
}

std::vector<TwinClass> twin_classes(const Graph& g) {
  // Vertices sharing an open neighbourhood can never both share a closed one
  // (that would put a vertex in its own neighbourhood), so grouping by the
  // two keys separately cannot split a class across kinds.
  std::map<uint64_t, uint64_t> open_groups, closed_groups;
  for (int v = 0; v < g.n; ++v) {
    open_groups[g.adj[v]] |= bit(v);
    closed_groups[g.closed_neighbourhood(v)] |= bit(v);
  }
  std::vector<TwinClass> out;
  for (auto [key, members] : open_groups)
    if (std::popcount(members) >= 2) out.push_back({VertexSet{g.n, members}, false});
  for (auto [key, members] : closed_groups)
    if (std::popcount(members) >= 2) out.push_back({VertexSet{g.n, members}, true});
  std::sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) {
    return lex_less(a.members.bits, b.members.bits);
  });
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  if (s.n != g.n) throw Error(Error::invalid_parameter, "vertex set order mismatch");
  for (int v = 0; v < g.n; ++v)
    if ((g.closed_neighbourhood(v) & s.bits) == 0) return false;
  return true;
}

static HittingProblem domination_problem(const GraphFamily& f) {
  HittingProblem p;
  p.n = f.n;
  for (const Graph& g : f.members)
    for (int v = 0; v < g.n; ++v) p.masks.push_back(g.closed_neighbourhood(v));
  reduce_masks(p.masks);
  return p;
}

int domination_number(const Graph& g, const SolverOptions& opt) {
  if (g.n == 0) throw Error(Error::invalid_parameter, "domination needs a nonempty graph");
  return solve_min_hitting(domination_problem(family_of({g})), opt.budget).k;
}

int simultaneous_domination_number(const GraphFamily& f, const SolverOptions& opt) {
  check_family_nonempty(f);
  return solve_min_hitting(domination_problem(f), opt.budget).k;
}

int gamma_prime(const Graph& g, const SolverOptions& opt) {
  if (g.n < 2)
    throw Error(Error::invalid_parameter, "vertex-deleted domination needs order >= 2");
  int best = g.n;
  for (int drop = 0; drop < g.n; ++drop) {
    // Rebuild on indices with `drop` removed, order preserved.
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
      if (u == drop || v == drop) continue;
      edges.emplace_back(u - (u > drop), v - (v > drop));
    }
    Graph h = make_graph(g.name + "-v", g.n - 1, edges);
    best = std::min(best, domination_number(h, opt));
  }
  return best;
}

PremiseProfile premise_profile(const GraphFamily& f, const SolverOptions& opt) {
  BasisCatalog cat = enumerate_bases(f, MetricSelector::Adjacency(), opt);
  PremiseProfile pp;
  pp.sd_a = cat.dimension;
  pp.basis_count = int(cat.bases.size());
  for (const VertexSet& b : cat.bases) {
    bool dominating = true;
    for (const Graph& g : f.members)
      if (!is_dominating(g, b)) {
        dominating = false;
        break;
      }
    bool trapped = false;
    int t_member = -1, t_vertex = -1;
    for (size_t gi = 0; gi < f.size() && !trapped; ++gi)
      for (int v = 0; v < f.n; ++v)
        if ((b.bits & f.members[gi].adj[v]) == b.bits) {
          trapped = true;
          t_member = int(gi);
          t_vertex = v;
          break;
        }
    if (dominating) {
      ++pp.dominating_basis_count;
      pp.exists_dominating_basis = true;
      if (!pp.dominating_witness) pp.dominating_witness = b;
      if (trapped && !pp.trapped_dominating_witness) {
        pp.trapped_dominating_witness = b;
        pp.trap_member = t_member;
        pp.trap_vertex = t_vertex;
      }
      if (!trapped) {
        pp.all_dominating_bases_trapped = false;
        if (!pp.untrapped_dominating_witness) pp.untrapped_dominating_witness = b;
      }
    }
    if (!trapped) {
      pp.exists_basis_never_inside_neighbourhood = true;
      if (!pp.never_inside_witness) pp.never_inside_witness = b;
    }
  }
  return pp;
}

GapProfile gap_profile(int n, const VertexSet& b) {
  if (n < 3 || b.n != n)
    throw Error(Error::invalid_parameter, "gap profile needs a cycle order >= 3");
  if (b.bits == 0 || b.bits == full_mask(n))
    throw Error(Error::invalid_parameter, "gap profile needs a proper nonempty subset");
  GapProfile gp;
  int first = std::countr_zero(b.bits);
  int run = 0;
  for (int step = 1; step <= n; ++step) {
    int v = (first + step) % n;
    if (b.contains(v)) {
      if (run > 0) {
        gp.lengths.push_back(run);
        if (run == 1) ++gp.gaps_1;
        if (run == 2) ++gp.gaps_2;
        if (run == 3) ++gp.gaps_3;
        gp.longest = std::max(gp.longest, run);
        run = 0;
      }
    } else {
      ++run;
    }
  }
  return gp;
}

}  // namespace simdim
