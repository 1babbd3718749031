#include <gtest/gtest.h>

#include <random>

#include "lpa/cycles.hpp"
#include "support/graphs.hpp"

using namespace lpa;
using lpa::testing::fork_graph;
using lpa::testing::random_graph;
using lpa::testing::toeplitz;
using lpa::testing::two_loops;

namespace {

// Closed paths based at v that do not pass through v in between, of length
// at most 2|E⁰|, counted up to 2. ω counts as two parallel edges.
std::size_t closed_simple_paths(const Graph& g, std::size_t v) {
  std::size_t count = 0;
  const std::size_t max_len = 2 * g.vertex_count();
  auto dfs = [&](auto&& self, std::size_t at, std::size_t len) -> void {
    if (len >= max_len) return;
    for (std::size_t b : g.out_bundles(at)) {
      const Bundle& bd = g.bundle(b);
      std::size_t copies = bd.multiplicity.is_omega() ? 2 : bd.multiplicity.count();
      if (bd.target == v) {
        count += copies;
      } else {
        for (std::size_t k = 0; k < copies && count < 2; ++k) self(self, bd.target, len + 1);
      }
      if (count >= 2) return;
    }
  };
  dfs(dfs, v, 0);
  return count;
}

}  // namespace

TEST(Cycles, Toeplitz) {
  Graph t = toeplitz();
  auto all = cycles(t);
  ASSERT_EQ(all.size(), 1U);
  EXPECT_EQ(all[0].label(t), "e");
  auto cu = cu_cycles(t);
  ASSERT_EQ(cu.size(), 1U);
  EXPECT_EQ(cycle_down(t, cu[0]), VertexSet::single(t.require_vertex("v")));
  EXPECT_EQ(cycle_closure(t, cu[0]), t.all_vertices());
}

TEST(Cycles, TwoLoopsHaveNoExclusiveCycle) {
  Graph g = two_loops();
  EXPECT_EQ(cycles(g).size(), 2U);
  EXPECT_TRUE(cu_cycles(g).empty());
  EXPECT_TRUE(condition_K(g));
  for (const auto& c : cycles(g)) {
    EXPECT_TRUE(cycle_down(g, c).contains(g.require_vertex("v")));
    EXPECT_EQ(cycle_down(g, c), cycle_closure(g, c));
  }
}

TEST(Cycles, AcyclicAndExitless) {
  EXPECT_TRUE(cycles(fork_graph()).empty());
  EXPECT_TRUE(cu_cycles(fork_graph()).empty());
  Graph loop = io::parse_graph("vertices v; edge e: v->v;");
  auto cu = cu_cycles(loop);
  ASSERT_EQ(cu.size(), 1U);
  EXPECT_TRUE(cycle_down(loop, cu[0]).empty());
}

TEST(Cycles, ParallelEdgesAndOmega) {
  Graph g = io::parse_graph("vertices u, v; bundle a: u->v * 2; edge b: v->u; bundle c: v->v * inf;");
  auto all = cycles(g);
  // a#1.b, a#2.b and the ω loop at v
  ASSERT_EQ(all.size(), 3U);
  EXPECT_TRUE(cu_cycles(g).empty());
  std::vector<std::string> labels;
  for (const auto& c : all) labels.push_back(c.label(g));
  EXPECT_NE(std::find(labels.begin(), labels.end(), "a#2.b"), labels.end());
  EXPECT_NE(std::find(labels.begin(), labels.end(), "c#w"), labels.end());
  EXPECT_EQ(parse_cycle(g, "b.a#2").label(g), "a#2.b");
  EXPECT_THROW(parse_cycle(g, "a"), DomainError);
}

TEST(Cycles, LabelsRoundTrip) {
  Graph g = io::parse_graph("vertices p, q, r; edge x: p->q; edge y: q->r; edge z: r->p; edge w: q->q;");
  for (const auto& c : cycles(g)) EXPECT_EQ(parse_cycle(g, c.label(g)), c);
  EXPECT_EQ(parse_cycle(g, "y.z.x"), parse_cycle(g, "x.y.z"));
}

TEST(Cycles, ExclusiveIffDownDiffersFromClosure) {
  std::mt19937 rng(3);
  int cycles_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = random_graph(rng, 1 + rng() % 5, rng() % 9, true);
    for (const auto& c : cycles(g)) {
      ++cycles_seen;
      bool exclusive = is_exclusive(g, c);
      EXPECT_EQ(exclusive, closed_simple_paths(g, c.base()) == 1) << c.label(g);
      EXPECT_EQ(exclusive, cycle_down(g, c) != cycle_closure(g, c)) << c.label(g);
      if (c.uses_omega()) {
        EXPECT_FALSE(exclusive);
      }
    }
  }
  EXPECT_GT(cycles_seen, 100);
}

TEST(DownwardDirected, Examples) {
  Graph g = two_loops();
  EXPECT_TRUE(downward_directed(g, g.all_vertices()));
  Graph f = fork_graph();
  VertexSet vw;
  vw.insert(f.require_vertex("v"));
  vw.insert(f.require_vertex("w"));
  EXPECT_FALSE(downward_directed(f, vw));
  EXPECT_TRUE(downward_directed(f, VertexSet::single(f.require_vertex("v"))));
  EXPECT_TRUE(row_finite(f));
  EXPECT_FALSE(row_finite(lpa::testing::breaking_example()));
  EXPECT_FALSE(condition_K(toeplitz()));
}
