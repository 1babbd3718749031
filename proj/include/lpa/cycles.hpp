#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/closure.hpp"

namespace lpa {

/// One edge of a cycle: the bundle it belongs to and which parallel copy.
struct CycleStep {
  static constexpr std::uint32_t kOmegaSlot = std::numeric_limits<std::uint32_t>::max();

  std::size_t vertex;  // source of the edge
  std::size_t bundle;
  std::uint32_t slot;  // 0-based copy index, or kOmegaSlot for the ω family

  auto operator<=>(const CycleStep&) const = default;
};

/// A closed simple path up to rotation, stored starting at its least vertex.
class CycleClass {
 public:
  CycleClass() = default;
  explicit CycleClass(std::vector<CycleStep> steps) : steps_(std::move(steps)) {
    auto least = std::min_element(steps_.begin(), steps_.end(),
                                  [](const CycleStep& a, const CycleStep& b) { return a.vertex < b.vertex; });
    std::rotate(steps_.begin(), least, steps_.end());
  }

  const std::vector<CycleStep>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  std::size_t base() const { return steps_.front().vertex; }

  VertexSet vertices() const {
    VertexSet out;
    for (const auto& s : steps_) out.insert(s.vertex);
    return out;
  }

  bool uses_omega() const {
    return std::any_of(steps_.begin(), steps_.end(),
                       [](const CycleStep& s) { return s.slot == CycleStep::kOmegaSlot; });
  }

  /// Bundle ids joined by '.', with `#k` (1-based) or `#w` on bundles of
  /// multiplicity other than 1.
  std::string label(const Graph& g) const {
    std::string out;
    for (const auto& s : steps_) {
      if (!out.empty()) out += ".";
      const Bundle& b = g.bundle(s.bundle);
      out += b.id;
      if (b.multiplicity.is_omega()) {
        out += "#w";
      } else if (b.multiplicity.count() != 1) {
        out += "#" + std::to_string(s.slot + 1);
      }
    }
    return out;
  }

  auto operator<=>(const CycleClass&) const = default;

 private:
  std::vector<CycleStep> steps_;
};

namespace detail {

inline constexpr std::size_t kMaxCycles = 100000;

inline void expand_slots(const Graph& g, const std::vector<std::size_t>& path_vertices,
                         const std::vector<std::size_t>& path_bundles, std::vector<CycleClass>& out) {
  std::vector<CycleStep> steps;
  steps.reserve(path_bundles.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == path_bundles.size()) {
      if (out.size() >= kMaxCycles) {
        throw DomainError("too-many-cycles", "graph has more than 100000 cycles");
      }
      out.emplace_back(steps);
      return;
    }
    const Bundle& b = g.bundle(path_bundles[i]);
    if (b.multiplicity.is_omega()) {
      steps.push_back({path_vertices[i], path_bundles[i], CycleStep::kOmegaSlot});
      self(self, i + 1);
      steps.pop_back();
      return;
    }
    for (std::uint32_t k = 0; k < b.multiplicity.count(); ++k) {
      steps.push_back({path_vertices[i], path_bundles[i], k});
      self(self, i + 1);
      steps.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All cycles, each once. A bundle of multiplicity m contributes m parallel
/// edges; an ω-bundle contributes one representative marked `#w`.
inline std::vector<CycleClass> cycles(const Graph& g) {
  std::vector<CycleClass> out;
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pv, pb;
  VertexSet on_path;
  for (std::size_t start = 0; start < n; ++start) {
    auto dfs = [&](auto&& self, std::size_t v) -> void {
      for (std::size_t b : g.out_bundles(v)) {
        std::size_t w = g.bundle(b).target;
        if (w == start) {
          pv.push_back(v);
          pb.push_back(b);
          detail::expand_slots(g, pv, pb, out);
          pv.pop_back();
          pb.pop_back();
        } else if (w > start && !on_path.contains(w)) {
          pv.push_back(v);
          pb.push_back(b);
          on_path.insert(w);
          self(self, w);
          on_path.erase(w);
          pv.pop_back();
          pb.pop_back();
        }
      }
    };
    on_path = VertexSet::single(start);
    dfs(dfs, start);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Ranges of the exits of c: edges leaving a cycle vertex other than the
/// cycle edge itself (parallel copies count as exits).
inline VertexSet cycle_exit_ranges(const Graph& g, const CycleClass& c) {
  VertexSet out;
  for (const auto& step : c.steps()) {
    for (std::size_t b : g.out_bundles(step.vertex)) {
      const Bundle& bd = g.bundle(b);
      if (b == step.bundle && !bd.multiplicity.is_omega() && bd.multiplicity.count() == 1) continue;
      out.insert(bd.target);
    }
  }
  return out;
}

/// c̄⁰: hereditary saturated closure of the cycle's vertices.
inline VertexSet cycle_closure(const Graph& g, const CycleClass& c) { return hs_closure(g, c.vertices()); }

inline bool is_cycle_of(const Graph& g, const CycleClass& c) {
  if (c.length() == 0) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < c.length(); ++i) {
    const CycleStep& s = c.steps()[i];
    if (s.bundle >= g.bundle_count()) return false;
    const Bundle& b = g.bundle(s.bundle);
    if (b.source != s.vertex || seen.contains(s.vertex)) return false;
    seen.insert(s.vertex);
    if (b.target != c.steps()[(i + 1) % c.length()].vertex) return false;
    if (b.multiplicity.is_omega() ? s.slot != CycleStep::kOmegaSlot : s.slot >= b.multiplicity.count()) {
      return false;
    }
  }
  return true;
}

/// c↓: hereditary saturated closure of the exit ranges.
inline VertexSet cycle_down(const Graph& g, const CycleClass& c) {
  if (!is_cycle_of(g, c)) throw DomainError("not-a-cycle", "not a cycle of this graph");
  return hs_closure(g, cycle_exit_ranges(g, c));
}

/// Exactly one closed simple path is based at the cycle's vertices, i.e. no
/// exit leads back onto the cycle.
inline bool is_exclusive(const Graph& g, const CycleClass& c) {
  const VertexSet verts = c.vertices();
  for (std::size_t r : cycle_exit_ranges(g, c).members()) {
    if (reachable_from(g, r).intersects(verts)) return false;
  }
  return true;
}

inline std::vector<CycleClass> cu_cycles(const Graph& g) {
  std::vector<CycleClass> out;
  for (auto& c : cycles(g)) {
    if (is_exclusive(g, c)) out.push_back(std::move(c));
  }
  return out;
}

/// Looks up a cycle by a label such as "e" or "f.g" in any rotation.
inline CycleClass parse_cycle(const Graph& g, std::string_view label) {
  std::vector<CycleStep> steps;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t dot = label.find('.', pos);
    if (dot == std::string_view::npos) dot = label.size();
    std::string_view part = label.substr(pos, dot - pos);
    std::string_view slot_text;
    if (auto hash = part.find('#'); hash != std::string_view::npos) {
      slot_text = part.substr(hash + 1);
      part = part.substr(0, hash);
    }
    auto b = g.find_bundle(part);
    if (!b) throw DomainError("unknown-cycle", "unknown bundle '" + std::string(part) + "' in cycle label");
    const Bundle& bd = g.bundle(*b);
    std::uint32_t slot = 0;
    if (bd.multiplicity.is_omega()) {
      slot = CycleStep::kOmegaSlot;
    } else if (!slot_text.empty()) {
      try {
        slot = static_cast<std::uint32_t>(std::stoul(std::string(slot_text))) - 1;
      } catch (const std::exception&) {
        throw DomainError("unknown-cycle", "bad edge copy in cycle label '" + std::string(label) + "'");
      }
    }
    steps.push_back({bd.source, *b, slot});
    pos = dot + 1;
  }
  CycleClass c(std::move(steps));
  if (!is_cycle_of(g, c)) {
    throw DomainError("unknown-cycle", "'" + std::string(label) + "' is not a cycle of the graph");
  }
  return c;
}

/// Every pair of vertices of S reaches a common vertex of S.
inline bool downward_directed(const Graph& g, VertexSet s) {
  g.check_subset(s);
  auto members = s.members();
  std::vector<VertexSet> reach;
  for (std::size_t v : members) reach.push_back(reachable_from(g, v) & s);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!reach[i].intersects(reach[j])) return false;
    }
  }
  return true;
}

inline bool condition_K(const Graph& g) { return cu_cycles(g).empty(); }

inline bool row_finite(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.is_infinite_emitter(v)) return false;
  }
  return true;
}

}  // namespace lpa
