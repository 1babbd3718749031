#include <gtest/gtest.h>

#include <random>

#include "lpa/cycles.hpp"
#include "lpa/pair_lattice.hpp"
#include "support/graphs.hpp"

using namespace lpa;
using lpa::testing::arrow;
using lpa::testing::breaking_example;
using lpa::testing::fork_graph;
using lpa::testing::random_graph;
using lpa::testing::single_vertex;
using lpa::testing::toeplitz;

namespace {

VertexSet set_of(const Graph& g, std::initializer_list<const char*> ids) {
  VertexSet out;
  for (const char* id : ids) out.insert(g.require_vertex(id));
  return out;
}

// Smallest set containing H that is hereditary, saturated and absorbs every
// S-vertex whose ranges it contains, by scanning all supersets.
VertexSet brute_force_s_saturation(const Graph& g, VertexSet h, VertexSet s) {
  const std::size_t n = g.vertex_count();
  VertexSet best = g.all_vertices();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet c(bits);
    if (!h.subset_of(c) || !is_hereditary_saturated(g, c)) continue;
    bool absorbs = true;
    for (std::size_t v : s.members()) {
      if (g.successors(v).subset_of(c) && !c.contains(v)) absorbs = false;
    }
    if (absorbs && c.size() < best.size()) best = c;
  }
  return best;
}

std::vector<VertexSet> hereditary_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) {
    if (is_hereditary(g, VertexSet(bits))) out.emplace_back(bits);
  }
  return out;
}

}  // namespace

TEST(Graph, RejectsDuplicatesAndUnknownVertices) {
  Graph g;
  g.add_vertex("u");
  EXPECT_THROW(g.add_vertex("u"), DomainError);
  EXPECT_THROW(g.add_bundle("e", "u", "nowhere"), DomainError);
  g.add_bundle("e", "u", "u");
  EXPECT_THROW(g.add_bundle("e", "u", "u"), DomainError);
  EXPECT_THROW(g.add_bundle("z", 0, 0, Multiplicity::finite(0)), DomainError);
}

TEST(Graph, VertexKinds) {
  Graph g = breaking_example();
  EXPECT_TRUE(g.is_infinite_emitter(g.require_vertex("w")));
  EXPECT_FALSE(g.is_regular(g.require_vertex("w")));
  EXPECT_TRUE(g.is_sink(g.require_vertex("a")));
  Graph t = toeplitz();
  EXPECT_TRUE(t.is_regular(t.require_vertex("u")));
}

TEST(Closure, HereditaryClosureExamples) {
  Graph t = toeplitz();
  EXPECT_EQ(hereditary_closure(t, set_of(t, {"v"})), set_of(t, {"v"}));
  EXPECT_EQ(hereditary_closure(t, set_of(t, {"u"})), set_of(t, {"u", "v"}));
  EXPECT_EQ(hereditary_closure(t, VertexSet{}), VertexSet{});
  EXPECT_THROW(hereditary_closure(t, VertexSet::single(7)), DomainError);
}

TEST(Closure, SSaturationExamples) {
  Graph f = fork_graph();
  EXPECT_EQ(s_saturation(f, set_of(f, {"v", "w"}), {}), f.all_vertices());
  Graph a = arrow();
  EXPECT_EQ(s_saturation(a, set_of(a, {"v"}), {}), a.all_vertices());
  EXPECT_EQ(s_saturation(a, set_of(a, {"v"}), {}), brute_force_s_saturation(a, set_of(a, {"v"}), {}));
  Graph t = toeplitz();
  EXPECT_EQ(s_saturation(t, set_of(t, {"v"}), {}), set_of(t, {"v"}));
  EXPECT_THROW(s_saturation(t, set_of(t, {"u"}), {}), DomainError);
}

TEST(Closure, BreakingVertices) {
  Graph g = breaking_example();
  EXPECT_EQ(breaking_vertices(g, set_of(g, {"a"})), set_of(g, {"w"}));
  EXPECT_EQ(breaking_vertices(g, set_of(g, {"a", "b"})), VertexSet{});
  EXPECT_EQ(breaking_vertices(g, set_of(g, {"b"})), VertexSet{});
  Graph f = fork_graph();
  for (VertexSet h : hereditary_sets(f)) EXPECT_TRUE(breaking_vertices(f, h).empty());
  Graph t = toeplitz();
  EXPECT_THROW(breaking_vertices(t, set_of(t, {"u"})), DomainError);
}

TEST(Closure, BreakingVertexAbsorbedOnlyWhenInS) {
  Graph g = breaking_example();
  VertexSet a = set_of(g, {"a"});
  VertexSet w = set_of(g, {"w"});
  EXPECT_EQ(s_saturation(g, set_of(g, {"a", "b"}), {}), set_of(g, {"a", "b"}));
  EXPECT_EQ(s_saturation(g, a, w), a);
  EXPECT_THROW(s_saturation(g, a, set_of(g, {"b"})), DomainError);
}

TEST(Closure, RandomPropertiesAgainstBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Graph g = random_graph(rng, n, rng() % 9, true);
    const VertexSet all = g.all_vertices();
    for (VertexSet h : hereditary_sets(g)) {
      VertexSet b = breaking_vertices(g, h);
      for (std::uint64_t sub = b.bits();; sub = (sub - 1) & b.bits()) {
        VertexSet s(sub);
        VertexSet sat = s_saturation(g, h, s);
        ASSERT_EQ(sat, brute_force_s_saturation(g, h, s));
        EXPECT_TRUE(h.subset_of(sat));
        EXPECT_EQ(s_saturation(g, sat, s - sat), sat);
        for (std::size_t v : sat.members()) {
          if (g.is_infinite_emitter(v)) {
            EXPECT_TRUE((h | s).contains(v));
          }
        }
        if (sub == 0) break;
      }
    }
    for (std::uint64_t bits = 0; bits <= all.bits(); ++bits) {
      VertexSet k(bits);
      VertexSet c = hs_closure(g, k);
      EXPECT_TRUE(k.subset_of(c));
      EXPECT_EQ(hs_closure(g, c), c);
      EXPECT_TRUE(is_hereditary_saturated(g, c));
      VertexSet hc = hereditary_closure(g, k);
      EXPECT_TRUE(is_hereditary(g, hc));
      EXPECT_EQ(hereditary_closure(g, hc), hc);
      for (std::uint64_t more = bits; more <= all.bits(); more = (more + 1) | bits) {
        EXPECT_TRUE(c.subset_of(hs_closure(g, VertexSet(more))));
        if (more == all.bits()) break;
      }
    }
    for (const auto& c : cycles(g)) {
      VertexSet on_cycle = c.vertices();
      for (VertexSet h : hereditary_sets(g)) {
        VertexSet sat = s_saturation(g, h, {});
        EXPECT_EQ((sat & on_cycle).subset_of(h), true);
      }
    }
  }
}

TEST(PairLattice, ToeplitzHasThreePairs) {
  Graph t = toeplitz();
  PairLattice lat(t);
  ASSERT_EQ(lat.size(), 3U);
  EXPECT_EQ(lat[0], (AdmissiblePair{{}, {}}));
  EXPECT_EQ(lat[1], (AdmissiblePair{set_of(t, {"v"}), {}}));
  EXPECT_EQ(lat[2], (AdmissiblePair{t.all_vertices(), {}}));
}

TEST(PairLattice, SmallGraphs) {
  PairLattice a(arrow());
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[a.top()].H, arrow().all_vertices());
  PairLattice s(single_vertex());
  ASSERT_EQ(s.size(), 2U);
  Graph g = breaking_example();
  PairLattice b(g);
  EXPECT_TRUE(b.index_of({set_of(g, {"a"}), set_of(g, {"w"})}).has_value());
  EXPECT_EQ(b[b.top()], (AdmissiblePair{g.all_vertices(), {}}));
}

TEST(PairLattice, ForkSupremum) {
  Graph f = fork_graph();
  std::vector<AdmissiblePair> family{{set_of(f, {"v"}), {}}, {set_of(f, {"w"}), {}}};
  EXPECT_EQ(pair_sup(f, family), (AdmissiblePair{f.all_vertices(), {}}));
  EXPECT_EQ(pair_sup(f, std::span<const AdmissiblePair>{}), (AdmissiblePair{{}, {}}));
  std::vector<AdmissiblePair> one{{set_of(f, {"v"}), {}}};
  EXPECT_EQ(pair_sup(f, one), one.front());
}

TEST(PairLattice, LatticeLawsOnRandomGraphs) {
  std::mt19937 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 5, rng() % 8, true);
    PairLattice lat(g);
    if (lat.size() > 32) continue;
    ++checked;
    const std::size_t m = lat.size();
    for (std::size_t i = 0; i < m; ++i) {
      ASSERT_TRUE(is_admissible(g, lat[i]));
      EXPECT_EQ(lat.join(i, i), i);
      EXPECT_EQ(lat.meet(i, i), i);
      EXPECT_TRUE(lat.leq(lat.bottom(), i));
      EXPECT_TRUE(lat.leq(i, lat.top()));
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_EQ(lat.join(i, j), lat.join(j, i));
        EXPECT_EQ(lat.meet(i, j), lat.meet(j, i));
        EXPECT_EQ(lat.join(i, lat.meet(i, j)), i);
        EXPECT_EQ(lat.meet(i, lat.join(i, j)), i);
        EXPECT_EQ(lat.leq(i, j), lat.join(i, j) == j);
        EXPECT_EQ(lat.leq(i, j), lat.meet(i, j) == i);
        // join is the least upper bound, meet the greatest lower bound
        for (std::size_t k = 0; k < m; ++k) {
          if (lat.leq(i, k) && lat.leq(j, k)) {
            EXPECT_TRUE(lat.leq(lat.join(i, j), k));
          }
          if (lat.leq(k, i) && lat.leq(k, j)) {
            EXPECT_TRUE(lat.leq(k, lat.meet(i, j)));
          }
          EXPECT_EQ(lat.join(lat.join(i, j), k), lat.join(i, lat.join(j, k)));
          EXPECT_EQ(lat.meet(i, lat.join(j, k)), lat.join(lat.meet(i, j), lat.meet(i, k)));
        }
      }
    }
    std::vector<AdmissiblePair> family;
    std::size_t fold = lat.bottom();
    for (std::size_t i = 0; i < m; i += 2) {
      family.push_back(lat[i]);
      fold = lat.join(fold, i);
    }
    EXPECT_EQ(pair_sup(g, family), lat[fold]);
  }
  EXPECT_GT(checked, 100);
}

TEST(PairLattice, EnumerationMatchesClosureDedup) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 5, rng() % 8, true);
    std::vector<VertexSet> closed;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.vertex_count()); ++bits) {
      VertexSet c = hs_closure(g, VertexSet(bits));
      if (std::find(closed.begin(), closed.end(), c) == closed.end()) closed.push_back(c);
    }
    std::size_t expected = 0;
    for (VertexSet h : closed) expected += std::size_t{1} << breaking_vertices(g, h).size();
    EXPECT_EQ(PairLattice(g).size(), expected);
  }
}
