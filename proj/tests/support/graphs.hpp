#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lpa/io/graph_parser.hpp"

namespace lpa::testing {

/// u with a loop e and an edge f to the sink v.
inline Graph toeplitz() { return io::parse_graph("vertices u, v; edge e: u->u; edge f: u->v;"); }

/// u->v, u->w.
inline Graph fork_graph() { return io::parse_graph("vertices u, v, w; edge e: u->v; edge f: u->w;"); }

/// u->v.
inline Graph arrow() { return io::parse_graph("vertices u, v; edge e: u->v;"); }

inline Graph single_vertex() { return io::parse_graph("vertices v;"); }

/// Two loops e1, e2 at v and an edge f to the sink w.
inline Graph two_loops() {
  return io::parse_graph("vertices v, w; edge e1: v->v; edge e2: v->v; edge f: v->w;");
}

/// w emits infinitely many edges to a and one edge to b.
inline Graph breaking_example() {
  return io::parse_graph("vertices w, a, b; bundle g: w->a * inf; edge h: w->b;");
}

/// Random graph on n vertices; each bundle gets multiplicity 1, 2 or (when
/// allow_omega) ω.
inline Graph random_graph(std::mt19937& rng, std::size_t n, std::size_t bundles, bool allow_omega,
                          bool acyclic = false) {
  Graph g;
  for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(0, allow_omega ? 5 : 4);
  for (std::size_t b = 0; b < bundles; ++b) {
    std::size_t s = pick(rng), t = pick(rng);
    if (acyclic) {
      if (s == t) continue;
      if (s > t) std::swap(s, t);
    }
    int m = mult(rng);
    Multiplicity mu = m == 5 ? Multiplicity::omega() : Multiplicity::finite(m == 4 ? 2 : 1);
    g.add_bundle("b" + std::to_string(b), s, t, mu);
  }
  return g;
}

/// Every DAG multigraph with edges i->j (i < j) on n vertices and at most
/// max_edges edges, one representative per isomorphism class.
inline std::vector<Graph> small_dags(std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::vector<int>> seen_forms;
  std::vector<Graph> out;
  std::vector<int> counts(slots.size(), 0);
  auto canonical = [&](const std::vector<int>& c) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::vector<int> best;
    do {
      std::vector<int> adj(n * n, 0);
      for (std::size_t k = 0; k < slots.size(); ++k) adj[perm[slots[k].first] * n + perm[slots[k].second]] = c[k];
      if (best.empty() || adj < best) best = adj;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  auto rec = [&](auto&& self, std::size_t k, std::size_t used) -> void {
    if (k == slots.size()) {
      auto form = canonical(counts);
      if (std::find(seen_forms.begin(), seen_forms.end(), form) != seen_forms.end()) return;
      seen_forms.push_back(form);
      Graph g;
      for (std::size_t v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
      std::size_t id = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        for (int e = 0; e < counts[s]; ++e) {
          g.add_bundle("e" + std::to_string(id++), slots[s].first, slots[s].second);
        }
      }
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t m = 0; used + m <= max_edges; ++m) {
      counts[k] = static_cast<int>(m);
      self(self, k + 1, used + m);
    }
    counts[k] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace lpa::testing
