#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "simdim/families.hpp"
#include "simdim/resolving.hpp"

using namespace simdim;

namespace {

template <typename Fn>
Error::Kind thrown_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind;
  }
  FAIL("expected an Error");
  return Error::invalid_parameter;
}

VertexSet vs(int n, std::initializer_list<int> elems) {
  VertexSet s{n, 0};
  for (int v : elems) s.add(v);
  return s;
}

// the four tampered copies of an 8-cycle from the bundled family file,
// already translated to zero-based indices
Graph tampered(int which) {
  static const std::vector<std::vector<std::pair<int, int>>> edges = {
      {{0, 5}, {5, 2}, {2, 7}, {7, 1}, {1, 3}, {3, 6}, {6, 4}, {4, 0}, {5, 1}, {1, 4}},
      {{3, 6}, {6, 4}, {4, 0}, {0, 5}, {5, 2}, {2, 7}, {7, 1}},
      {{1, 3}, {3, 6}, {6, 4}, {4, 0}, {0, 5}, {5, 2}, {2, 7}, {3, 7}, {3, 5}, {3, 4}},
      {{0, 5}, {5, 2}, {2, 7}, {7, 1}, {1, 3}, {3, 6}, {6, 4}, {4, 0}, {3, 7}, {7, 4}, {5, 7}, {5, 4}}};
  return make_graph("H" + std::to_string(which + 1), 8, edges[size_t(which)]);
}

}  // namespace

TEST_CASE("permutation application") {
  Permutation f{{1, 2, 0}};
  CHECK(f.apply(0) == 1);
  CHECK(f.apply_mask(bit(0) | bit(2)) == (bit(1) | bit(0)));
  Graph g = apply_permutation(path_graph(3), f);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("stabilizer enumeration") {
  auto s5 = stabilizer_enumerate(5, vs(5, {0, 2}), 100);
  REQUIRE(s5.size() == 6);
  CHECK(s5[0].img == std::vector<int>{0, 1, 2, 3, 4});  // identity first
  CHECK(s5[1].img == std::vector<int>{0, 1, 2, 4, 3});
  CHECK(s5.back().img == std::vector<int>{0, 4, 2, 3, 1});
  for (const Permutation& f : s5) {
    CHECK(f.apply(0) == 0);
    CHECK(f.apply(2) == 2);
  }

  auto s8 = stabilizer_enumerate(8, vs(8, {0, 2, 6}), 1000);
  CHECK(s8.size() == 120);
  std::set<std::vector<int>> uniq;
  for (const Permutation& f : s8) uniq.insert(f.img);
  CHECK(uniq.size() == 120);

  CHECK(stabilizer_enumerate(4, vs(4, {0, 1, 2}), 10).size() == 1);

  // falls back to sampling once the order exceeds the cap
  auto sampled = stabilizer_enumerate(12, vs(12, {0}), 50, 7);
  CHECK(sampled.size() == 50);
  for (const Permutation& f : sampled) {
    CHECK(f.apply(0) == 0);
    std::set<int> seen(f.img.begin(), f.img.end());
    CHECK(seen.size() == 12);
  }
  auto again = stabilizer_enumerate(12, vs(12, {0}), 50, 7);
  CHECK(again.size() == 50);
  CHECK(again[10].img == sampled[10].img);
}

TEST_CASE("membership around a fixed basis") {
  Graph c8 = cycle_graph(8);
  VertexSet b = vs(8, {0, 2, 6});

  CHECK(is_member(c8, c8, b).has_value());
  CHECK(is_member(c8, c8, b)->img == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

  for (int i = 0; i < 4; ++i) {
    auto f = is_member(tampered(i), c8, b);
    REQUIRE(f.has_value());
    CHECK(is_member_with(tampered(i), c8, b, *f));
    // the certifying relabeling maps N(0)={1,7} to {4,5}, N(2) to {5,7}...
    CHECK(f->apply_mask(c8.adj[0]) == tampered(i).adj[0]);
    CHECK(f->apply_mask(c8.adj[2]) == tampered(i).adj[2]);
    CHECK(f->apply_mask(c8.adj[6]) == tampered(i).adj[6]);
  }

  // adding a chord at a basis vertex breaks membership
  Graph chord = make_graph("chord", 8,
                           {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}});
  CHECK_FALSE(is_member(chord, c8, b).has_value());

  for (uint64_t m = 0; m < 16; ++m) {
    if (std::popcount(m) != 2) continue;
    CHECK_FALSE(is_member(complete_graph(4), cycle_graph(4), VertexSet{4, m}).has_value());
  }

  CHECK(thrown_kind([] {
          is_member(path_graph(12), path_graph(12), VertexSet{12, 0}, 1000);
        }) == Error::budget_exceeded);
}

TEST_CASE("seeded member sampling") {
  Graph c8 = cycle_graph(8);
  VertexSet b = vs(8, {0, 2, 6});

  for (SampleMode mode : {SampleMode::relabel, SampleMode::free_outside}) {
    GraphFamily fam = sample_members(c8, b, mode, 17, 6);
    CHECK(fam.n == 8);
    REQUIRE(fam.members.size() == 6);
    CHECK(fam.members[0].adj == c8.adj);
    for (const Graph& m : fam.members) CHECK(is_member(m, c8, b).has_value());

    GraphFamily same = sample_members(c8, b, mode, 17, 6);
    GraphFamily other = sample_members(c8, b, mode, 18, 6);
    for (size_t i = 0; i < 6; ++i) CHECK(same.members[i].adj == fam.members[i].adj);
    bool any_differ = false;
    for (size_t i = 0; i < 6; ++i) any_differ = any_differ || other.members[i].adj != fam.members[i].adj;
    CHECK(any_differ);
  }

  // a shared basis of the source graph generates the sampled family
  BasisCatalog cat = enumerate_bases(family_of({c8}), MetricSelector::Adjacency());
  CHECK(cat.dimension == 3);
  GraphFamily fam = sample_members(c8, b, SampleMode::free_outside, 5, 8);
  CHECK(min_generator(fam, MetricSelector::Adjacency()).k == 3);
  CHECK(is_generator(fam, MetricSelector::Adjacency(), b));
}

TEST_CASE("weakly induced subgraphs") {
  Graph w = weakly_induced(path_graph(4), vs(4, {1}));
  CHECK(w.n == 3);
  CHECK(w.has_edge(0, 1));
  CHECK(w.has_edge(1, 2));
  CHECK_FALSE(w.has_edge(0, 2));
  CHECK(w.labels == std::vector<int>{0, 1, 2});

  Graph wc = weakly_induced(cycle_graph(8), vs(8, {0, 2, 6}));
  CHECK(wc.n == 7);  // vertex 4 drops out
  int edges = 0;
  for (int v = 0; v < wc.n; ++v) edges += wc.degree(v);
  CHECK(edges == 12);

  Graph all = weakly_induced(cycle_graph(5), VertexSet{5, full_mask(5)});
  CHECK(all.n == 5);
  CHECK(all.adj == cycle_graph(5).adj);

  CHECK(thrown_kind([] { weakly_induced(path_graph(4), VertexSet{4, 0}); }) ==
        Error::invalid_parameter);
}

TEST_CASE("small isomorphism check") {
  CHECK(small_iso(path_graph(4), path_graph(4)));
  Graph rev = make_graph("rev", 4, {{3, 2}, {2, 1}, {1, 0}});
  CHECK(small_iso(path_graph(4), rev));
  CHECK(small_iso(path_graph(4), complement(path_graph(4))));
  CHECK_FALSE(small_iso(complete_graph(3), path_graph(3)));
  CHECK_FALSE(small_iso(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
  CHECK(thrown_kind([] { small_iso(path_graph(11), path_graph(11)); }) == Error::budget_exceeded);
}

TEST_CASE("weakly induced shape is shared across a class") {
  Graph c8 = cycle_graph(8);
  VertexSet b = vs(8, {0, 2, 6});
  Graph shape = weakly_induced(c8, b);
  for (SampleMode mode : {SampleMode::relabel, SampleMode::free_outside}) {
    GraphFamily fam = sample_members(c8, b, mode, 29, 15);
    for (const Graph& m : fam.members) CHECK(small_iso(weakly_induced(m, b), shape));
  }
}
