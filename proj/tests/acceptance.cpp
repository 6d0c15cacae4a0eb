// Acceptance gate: every release-level requirement gets one PASS/FAIL line
// with its elapsed time, and the exit code is the number of failed lines.
// Time limits are part of the requirement and failing one fails the line.
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "simdim/families.hpp"
#include "simdim/io.hpp"
#include "simdim/products.hpp"
#include "simdim/reference.hpp"
#include "simdim/resolving.hpp"

using namespace simdim;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw Failure(msg); }

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return make_graph("R" + std::to_string(n), n, edges);
}

std::string data_path(const char* file) { return std::string(SIMDIM_DATA_DIR) + "/" + file; }

const MetricSelector kAdj = MetricSelector::Adjacency();
const MetricSelector kFull = MetricSelector::Full();

// ---------------------------------------------------------------------------

std::string c1_path_cycle_formula() {
  for (int n = 4; n <= 12; ++n) {
    int expected = (2 * n + 2) / 5;
    int dp = adjacency_dimension(path_graph(n));
    int dc = adjacency_dimension(cycle_graph(n));
    if (dp != expected || dc != expected)
      fail("order-" + std::to_string(n) + "-got-" + std::to_string(dp) + "/" +
           std::to_string(dc) + "-want-" + std::to_string(expected));
  }
  return "orders-4..12-match";
}

std::string c2_tree_family() {
  GraphFamily fam = family_of(parse_family_file(data_path("trees.family")));
  if (fam.size() != 3) fail("bundle-should-have-3-trees");
  int sda = min_generator(fam, kAdj).k;
  if (sda != 5) fail("adjacency-value-" + std::to_string(sda) + "-want-5");
  if (!is_generator(fam, kAdj, parse_label_set(fam.members.front(), "{1,3,6,7,8}")))
    fail("{1,3,6,7,8}-does-not-verify");
  int sd = min_generator(fam, kFull).k;
  if (sd != 4) fail("metric-value-" + std::to_string(sd) + "-want-4");
  if (!is_generator(fam, kFull, parse_label_set(fam.members.front(), "{1,6,7,8}")))
    fail("{1,6,7,8}-does-not-verify");
  return "values-and-witnesses-check";
}

std::string c3_anchored_family() {
  std::vector<Graph> graphs = parse_family_file(data_path("anchored.family"));
  if (graphs.size() != 5) fail("bundle-should-have-5-graphs");
  const Graph& c8 = graphs.front();
  if (c8.name != "C8") fail("first-member-should-be-the-cycle");
  if (adjacency_dimension(c8) != 3) fail("cycle-adjacency-dimension-not-3");
  VertexSet b = parse_label_set(c8, "{1,3,7}");
  if (!is_generator(family_of({c8}), kAdj, b)) fail("{1,3,7}-not-a-generator");
  for (size_t i = 1; i < graphs.size(); ++i)
    if (!is_member(graphs[i], c8, b)) fail(graphs[i].name + "-fails-membership");
  if (min_generator(family_of(graphs), kAdj).k != 3) fail("family-value-not-3");
  return "membership-and-shared-anchor";
}

// Seeded corona battery shared by the next two criteria: small connected
// first factors against random second factors of orders 3..5.
struct BatteryInstance {
  GraphFamily gs, hs;
  GraphFamily product;
  int rhs = -1;  // |V| * simultaneous adjacency dimension of hs
};

std::vector<BatteryInstance> build_battery() {
  std::mt19937_64 rng(20260822);
  std::vector<BatteryInstance> out;
  std::vector<GraphFamily> firsts = {
      family_of({complete_graph(2)}),
      family_of({path_graph(3), cycle_graph(3)}),
      family_of({cycle_graph(3)}),
  };
  size_t shape = 0;
  for (int np : {3, 4, 5})
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<Graph> hs;
      int count = 2 + int(rng() % 2);
      for (int i = 0; i < count; ++i) hs.push_back(random_graph(np, rng));
      GraphFamily hf = family_of(std::move(hs));
      GraphFamily gf = firsts[shape++ % firsts.size()];
      out.push_back({gf, hf, family_corona(gf, hf), -1});
    }
  return out;
}

std::string c4_corona_metric_value(std::vector<BatteryInstance>& battery) {
  for (BatteryInstance& b : battery) {
    int sda_h = min_generator(b.hs, kAdj).k;
    if (reference_min_generator(b.hs, kAdj).k != sda_h) fail("second-factor-solver-mismatch");
    b.rhs = b.gs.n * sda_h;
    int sd = min_generator(b.product, kFull).k;
    if (sd != b.rhs)
      fail("value-" + std::to_string(sd) + "-want-" + std::to_string(b.rhs) + "-at-order-" +
           std::to_string(b.product.n));
    if (b.product.n <= 12 && reference_min_generator(b.product, kFull).k != sd)
      fail("product-solver-mismatch");
    for (const Graph& g : b.gs.members)
      if (min_generator(family_corona(family_of({g}), b.hs), kFull).k != b.rhs)
        fail("per-member-value-differs-for-" + g.name);
  }
  return std::to_string(battery.size()) + "-instances";
}

std::string c5_correction_term_bounds(const std::vector<BatteryInstance>& battery) {
  int used = 0;
  for (const BatteryInstance& b : battery) {
    if (b.rhs < 0) continue;
    int f = min_generator(b.product, kAdj).k - b.rhs;
    if (f < 0 || f > b.gs.n - 1)
      fail("f=" + std::to_string(f) + "-outside-0.." + std::to_string(b.gs.n - 1));
    ++used;
  }
  if (used == 0) fail("battery-unavailable");
  return std::to_string(used) + "-instances-in-range";
}

std::string c6_correction_term_cases() {
  // (a) an isolated vertex in the second factor forces the top value
  {
    GraphFamily gs = family_of({cycle_graph(4)});
    GraphFamily hs = family_of({disjoint_union(empty_graph(1), complete_graph(2))});
    int got = min_generator(family_corona(gs, hs), kAdj).k;
    int want = gs.n * min_generator(hs, kAdj).k + gs.n - 1;
    if (got != want) fail("isolated-a1-" + std::to_string(got) + "-want-" + std::to_string(want));
    gs = family_of({path_graph(3), cycle_graph(3)});
    hs = family_of({disjoint_union(empty_graph(1), path_graph(3))});
    got = min_generator(family_corona(gs, hs), kAdj).k;
    want = gs.n * min_generator(hs, kAdj).k + gs.n - 1;
    if (got != want) fail("isolated-a2-" + std::to_string(got) + "-want-" + std::to_string(want));
  }
  // (b) the worked two-member family: value 2n plus the deleted-vertex
  // domination number of the first factor
  {
    GraphFamily pc = family_of({path_graph(5), cycle_graph(5)});
    for (int n : {2, 3, 4}) {
      Graph g = path_graph(n);
      int got = min_generator(family_corona(family_of({g}), pc), kAdj).k;
      int want = 2 * n + gamma_prime(g);
      if (got != want)
        fail("worked-P" + std::to_string(n) + "-" + std::to_string(got) + "-want-" +
             std::to_string(want));
    }
  }
  // (c) a sampled relabel family keeps a dominating shared basis, so the
  // correction term vanishes
  {
    Graph p10 = path_graph(10);
    BasisCatalog cat = enumerate_bases(family_of({p10}), kAdj);
    VertexSet b;
    bool found = false;
    for (const VertexSet& cb : cat.bases)
      if (is_dominating(p10, cb)) {
        b = cb;
        found = true;
        break;
      }
    if (!found) fail("relabel-no-dominating-basis");
    GraphFamily fam = sample_members(p10, b, SampleMode::relabel, 77, 3);
    for (const Graph& m : fam.members)
      if (!is_dominating(m, b)) fail("relabel-domination-not-preserved");
    int sda_h = min_generator(fam, kAdj).k;
    if (sda_h != cat.dimension) fail("relabel-family-value-moved");
    int got = min_generator(family_corona(family_of({complete_graph(2)}), fam), kAdj).k;
    if (got != 2 * sda_h) fail("relabel-f-nonzero-" + std::to_string(got - 2 * sda_h));
  }
  return "isolated+worked+relabel";
}

std::string c7_residue_sweep() {
  for (int n = 7; n <= 13; ++n) {
    bool should_exist = n % 5 != 1 && n % 5 != 3;
    for (bool cycle : {false, true}) {
      Graph g = cycle ? cycle_graph(n) : path_graph(n);
      BasisCatalog cat = enumerate_bases(family_of({g}), kAdj);
      bool any = false;
      for (const VertexSet& b : cat.bases) any = any || is_dominating(g, b);
      if (any != should_exist)
        fail(g.name + (any ? "-unexpected-dominating-basis" : "-missing-dominating-basis"));
      if (cycle && !should_exist)
        for (const VertexSet& b : cat.bases)
          if (gap_profile(n, b).gaps_3 == 0) fail(g.name + "-basis-without-3-gap");
    }
  }
  return "orders-7..13";
}

std::string c8_transfer_scan() {
  auto hits_all = [](uint64_t s, const std::vector<uint64_t>& masks) {
    for (uint64_t m : masks)
      if ((s & m) == 0) return false;
    return true;
  };
  auto scan = [&](const Graph& g1, const Graph& g2, const Graph& h) {
    Graph p1 = corona(g1, h);
    Graph p2 = corona(g2, h);
    auto m1 = pair_distinguisher_masks(family_of({p1}), kFull);
    auto m2 = pair_distinguisher_masks(family_of({p2}), kFull);
    for (uint64_t s = 0; s < (uint64_t{1} << p1.n); ++s)
      if (hits_all(s, m1) != hits_all(s, m2))
        fail("transfer-breaks-between-" + g1.name + "-and-" + g2.name + "-at-" +
             format_index_set(VertexSet{p1.n, s}));
  };
  scan(path_graph(3), cycle_graph(3), complete_graph(2));
  scan(path_graph(3), complete_bipartite_graph(1, 2), complete_graph(2));
  return "1024-subsets-scanned";
}

std::string c9_solver_equivalence() {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    int n = 4 + int(rng() % 5);
    Graph g = random_graph(n, rng, 0.25 + 0.05 * double(i % 8));
    GraphFamily fam = family_of({g});
    MinResult a = min_generator(fam, kAdj);
    MinResult b = reference_min_generator(fam, kAdj);
    if (a.k != b.k || !(a.witness == b.witness)) fail("adjacency-mismatch-at-" + std::to_string(i));
    if (is_connected(g)) {
      MinResult fa = min_generator(fam, kFull);
      MinResult fb = reference_min_generator(fam, kFull);
      if (fa.k != fb.k || !(fa.witness == fb.witness))
        fail("full-metric-mismatch-at-" + std::to_string(i));
    }
  }
  return "200-seeded-graphs";
}

std::string c10_property_suite() {
  std::mt19937_64 rng(991);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(4 + int(rng() % 5), rng, 0.4);
    if (adjacency_dimension(g) != adjacency_dimension(complement(g)))
      fail("complement-invariance-at-" + std::to_string(i));
  }
  for (int i = 0; i < 30; ++i) {
    Graph g = random_graph(7, rng, 0.45);
    GraphFamily fam = family_of({g});
    MinResult t1 = min_generator(fam, MetricSelector::Truncated(1));
    if (t1.k != g.n - 1) fail("depth-one-not-forcing-n-1");
    int prev = t1.k;
    for (int t = 1; t <= 3; ++t) {
      MinResult coarse = min_generator(fam, MetricSelector::Truncated(t));
      if (!is_generator(fam, MetricSelector::Truncated(t + 1), coarse.witness))
        fail("witness-lost-at-depth-" + std::to_string(t + 1));
      int next = min_generator(fam, MetricSelector::Truncated(t + 1)).k;
      if (next > coarse.k || coarse.k > prev) fail("value-not-monotone-in-depth");
      prev = coarse.k;
    }
    MinResult adj = min_generator(fam, kAdj);
    for (const TwinClass& c : twin_classes(g))
      if (std::popcount(c.members.bits & adj.witness.bits) < c.members.count() - 1)
        fail("twin-class-underrepresented");
    VertexSet wider = adj.witness;
    for (int extra = 0; extra < 3; ++extra) wider.add(int(rng() % g.n));
    if (!is_generator(fam, kAdj, wider)) fail("superset-closure-broken");
  }
  for (const Graph& g : {cycle_graph(8), path_graph(9)}) {
    VertexSet b = min_generator(family_of({g}), kAdj).witness;
    Graph shape = weakly_induced(g, b);
    for (SampleMode mode : {SampleMode::relabel, SampleMode::free_outside}) {
      GraphFamily fam = sample_members(g, b, mode, 13, 51);
      for (const Graph& m : fam.members)
        if (!small_iso(weakly_induced(m, b), shape)) fail("anchored-shape-not-invariant");
    }
  }
  return "five-property-groups";
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failures = 0;
  auto run = [&](int idx, double limit_s, auto&& fn) {
    auto t0 = clock::now();
    std::string note;
    bool ok = true;
    try {
      note = fn();
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    double el = std::chrono::duration<double>(clock::now() - t0).count();
    if (ok && limit_s > 0 && el > limit_s) {
      ok = false;
      note = "over-time-limit-" + std::to_string(int(limit_s)) + "s";
    }
    std::printf("%s criterion-%d (%.2fs) %s\n", ok ? "PASS" : "FAIL", idx, el, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
    return el;
  };

  run(1, 10, c1_path_cycle_formula);
  run(2, 5, c2_tree_family);
  run(3, 10, c3_anchored_family);
  std::vector<BatteryInstance> battery;
  double e4 = run(4, 300, [&] {
    battery = build_battery();
    return c4_corona_metric_value(battery);
  });
  // shares the five-minute budget with the battery itself
  run(5, std::max(1.0, 300 - e4), [&] { return c5_correction_term_bounds(battery); });
  run(6, 600, c6_correction_term_cases);
  run(7, 120, c7_residue_sweep);
  run(8, 30, c8_transfer_scan);
  run(9, 120, c9_solver_equivalence);
  run(10, 0, c10_property_suite);

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
