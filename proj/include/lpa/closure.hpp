#pragma once

#include "lpa/graph.hpp"

namespace lpa {

/// Smallest hereditary superset of `k`: iterate targets of bundles leaving the set.
inline VertexSet hereditary_closure(const Graph& g, VertexSet k) {
  g.check_subset(k);
  VertexSet current = k;
  std::vector<std::size_t> stack = k.members();
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t b : g.out_bundles(v)) {
      std::size_t w = g.bundle(b).target;
      if (!current.contains(w)) {
        current.insert(w);
        stack.push_back(w);
      }
    }
  }
  return current;
}

inline bool is_hereditary(const Graph& g, VertexSet h) {
  g.check_subset(h);
  for (std::size_t v : h.members()) {
    if (!g.successors(v).subset_of(h)) return false;
  }
  return true;
}

inline bool is_saturated(const Graph& g, VertexSet h) {
  g.check_subset(h);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!h.contains(v) && g.is_regular(v) && g.successors(v).subset_of(h)) return false;
  }
  return true;
}

inline bool is_hereditary_saturated(const Graph& g, VertexSet h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

namespace detail {

inline void require_hereditary(const Graph& g, VertexSet h) {
  if (!is_hereditary(g, h)) {
    throw DomainError("not-hereditary", "vertex set " + g.label(h) + " is not hereditary");
  }
}

inline VertexSet breaking_vertices_unchecked(const Graph& g, VertexSet h) {
  VertexSet out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || !g.is_infinite_emitter(v)) continue;
    std::uint64_t escaping = 0;
    bool infinite = false;
    for (std::size_t b : g.out_bundles(v)) {
      const Bundle& bd = g.bundle(b);
      if (h.contains(bd.target)) continue;
      if (bd.multiplicity.is_omega()) {
        infinite = true;
        break;
      }
      escaping += bd.multiplicity.count();
    }
    if (!infinite && escaping > 0) out.insert(v);
  }
  return out;
}

}  // namespace detail

/// Infinite emitters outside `h` that send a finite, nonzero number of edges
/// out of `h`.
inline VertexSet breaking_vertices(const Graph& g, VertexSet h) {
  detail::require_hereditary(g, h);
  return detail::breaking_vertices_unchecked(g, h);
}

/// The S-saturation of a hereditary set: repeatedly absorb every vertex that
/// is regular or in `s` and whose edges all land in the current set.
inline VertexSet s_saturation(const Graph& g, VertexSet h, VertexSet s) {
  detail::require_hereditary(g, h);
  g.check_subset(s);
  // Joins feed in S-vertices that were breaking for a smaller H, so only
  // singularity is required here.
  for (std::size_t v : (s - h).members()) {
    if (!g.is_infinite_emitter(v)) {
      throw DomainError("bad-breaking-set",
                        "S-vertex " + g.vertex_id(v) + " is neither in H nor an infinite emitter");
    }
  }
  VertexSet current = h;
  for (bool grew = true; grew;) {
    grew = false;
    VertexSet layer;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (current.contains(v)) continue;
      if (!(g.is_regular(v) || s.contains(v))) continue;
      if (g.successors(v).subset_of(current)) layer.insert(v);
    }
    if (!layer.empty()) {
      current |= layer;
      grew = true;
    }
  }
  return current;
}

/// Hereditary saturated closure.
inline VertexSet hs_closure(const Graph& g, VertexSet k) {
  return s_saturation(g, hereditary_closure(g, k), VertexSet{});
}

/// Vertices reachable from v by a path of length >= 0.
inline VertexSet reachable_from(const Graph& g, std::size_t v) {
  return hereditary_closure(g, VertexSet::single(v));
}

}  // namespace lpa
