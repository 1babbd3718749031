#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpa/cycles.hpp"
#include "lpa/laurent_ideal.hpp"
#include "lpa/pair_lattice.hpp"
#include "lpa/ring.hpp"

namespace lpa {

/// Everything derived from (E, R) that the classification needs, computed once.
class LatticeContext {
 public:
  LatticeContext(Graph g, RingSpec r) : graph_(std::move(g)), ring_(std::move(r)), lattice_(graph_) {
    const std::size_t m = lattice_.size();
    below_.resize(m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && lattice_.leq(b, a)) below_[a].push_back(b);
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (!lattice_.leq(a, b) && !lattice_.leq(b, a)) incomparable_.emplace_back(a, b);
      }
    }
    top_down_.resize(m);
    for (std::size_t i = 0; i < m; ++i) top_down_[i] = i;
    std::stable_sort(top_down_.begin(), top_down_.end(),
                     [&](std::size_t a, std::size_t b) { return below_[a].size() > below_[b].size(); });
    for (std::size_t v = 0; v < graph_.vertex_count(); ++v) {
      vertex_pair_.push_back(lattice_.require_index({hs_closure(graph_, VertexSet::single(v)), {}}));
    }
    cu_ = cu_cycles(graph_);
    for (const auto& c : cu_) {
      closure_pair_.push_back(lattice_.require_index({cycle_closure(graph_, c), {}}));
      down_pair_.push_back(lattice_.require_index({cycle_down(graph_, c), {}}));
      cycle_labels_.push_back(c.label(graph_));
    }
  }

  static std::shared_ptr<const LatticeContext> make(Graph g, RingSpec r) {
    return std::make_shared<const LatticeContext>(std::move(g), std::move(r));
  }

  const Graph& graph() const { return graph_; }
  const RingSpec& ring() const { return ring_; }
  const PairLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }

  /// Indices strictly below a.
  const std::vector<std::size_t>& below(std::size_t a) const { return below_[a]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& incomparable_pairs() const { return incomparable_; }
  /// Every index appears after all indices above it.
  const std::vector<std::size_t>& top_down() const { return top_down_; }

  /// Index of (v̄, ∅).
  std::size_t vertex_pair(std::size_t v) const { return vertex_pair_.at(v); }

  const std::vector<CycleClass>& cu() const { return cu_; }
  /// Index of (c̄⁰, ∅) for the k-th exclusive cycle.
  std::size_t closure_pair(std::size_t k) const { return closure_pair_.at(k); }
  /// Index of (c↓, ∅) for the k-th exclusive cycle.
  std::size_t down_pair(std::size_t k) const { return down_pair_.at(k); }
  const std::string& cycle_label(std::size_t k) const { return cycle_labels_.at(k); }

  std::optional<std::size_t> cu_index(const CycleClass& c) const {
    auto it = std::find(cu_.begin(), cu_.end(), c);
    if (it == cu_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - cu_.begin());
  }

 private:
  Graph graph_;
  RingSpec ring_;
  PairLattice lattice_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::pair<std::size_t, std::size_t>> incomparable_;
  std::vector<std::size_t> top_down_;
  std::vector<std::size_t> vertex_pair_;
  std::vector<CycleClass> cu_;
  std::vector<std::size_t> closure_pair_;
  std::vector<std::size_t> down_pair_;
  std::vector<std::string> cycle_labels_;
};

using ContextPtr = std::shared_ptr<const LatticeContext>;

/// f over the whole pair lattice, by index. The slot of (∅,∅) always holds R.
using FunctionTable = std::vector<RingIdeal>;

inline FunctionTable constant_table(const LatticeContext& ctx, const RingIdeal& value) {
  FunctionTable t(ctx.size(), value);
  t[ctx.lattice().bottom()] = RingIdeal::unit(ctx.ring());
  return t;
}

inline bool is_order_reversing(const LatticeContext& ctx, const FunctionTable& f) {
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    for (std::size_t b : ctx.below(a)) {
      if (!f[b].contains(f[a])) return false;
    }
  }
  return true;
}

/// Smallest saturated function above `raw`: push values down the order and
/// f(a ∨ b) += f(a) ∩ f(b), repeated until nothing changes.
inline FunctionTable saturate_function(const LatticeContext& ctx, FunctionTable f) {
  if (f.size() != ctx.size()) throw DomainError("bad-table", "function table has the wrong size");
  for (const auto& v : f) require_same_ring(v.ring(), ctx.ring());
  const PairLattice& lat = ctx.lattice();
  f[lat.bottom()] = RingIdeal::unit(ctx.ring());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a : ctx.top_down()) {
      for (std::size_t b : ctx.below(a)) {
        if (!f[b].contains(f[a])) {
          f[b] = f[b] + f[a];
          changed = true;
        }
      }
    }
    for (const auto& [a, b] : ctx.incomparable_pairs()) {
      std::size_t j = lat.join(a, b);
      RingIdeal meet = f[a] & f[b];
      if (!f[j].contains(meet)) {
        f[j] = f[j] + meet;
        changed = true;
      }
    }
  }
  return f;
}

inline bool is_saturated_function(const LatticeContext& ctx, const FunctionTable& f) {
  return f.size() == ctx.size() && f[ctx.lattice().bottom()].is_unit() && saturate_function(ctx, f) == f;
}

struct Violation {
  std::string code;
  std::string message;
};

/// Every way (f, g) fails to lie in 𝒟_{E,R}.
inline std::vector<Violation> dpair_validate(const LatticeContext& ctx, const FunctionTable& f,
                                             const std::vector<LaurentIdeal>& g) {
  std::vector<Violation> out;
  if (f.size() != ctx.size() || g.size() != ctx.cu().size()) {
    out.push_back({"shape", "tables do not match the graph"});
    return out;
  }
  if (!is_saturated_function(ctx, f)) out.push_back({"not-saturated", "f is not a saturated function"});
  for (std::size_t k = 0; k < ctx.cu().size(); ++k) {
    const std::string& label = ctx.cycle_label(k);
    RingIdeal at_closure = f[ctx.closure_pair(k)];
    RingIdeal contracted = g[k].contract();
    if (!(contracted == at_closure)) {
      out.push_back({"contraction", "cycle " + label + ": g(c) ∩ R = " + contracted.to_string() +
                                        " but f(c̄⁰) = " + at_closure.to_string()});
    }
    std::size_t down = ctx.down_pair(k);
    if (down != ctx.lattice().bottom() && !f[down].contains(g[k].coefficient_ideal())) {
      out.push_back({"coefficients", "cycle " + label + ": coefficients of g(c) generate " +
                                         g[k].coefficient_ideal().to_string() + ", not inside f(c↓) = " +
                                         f[down].to_string()});
    }
  }
  return out;
}

/// An element (f, g) of 𝒟_{E,R}.
class DPair {
 public:
  /// Throws DomainError("invalid-pair") listing the violations.
  DPair(ContextPtr ctx, FunctionTable f, std::vector<LaurentIdeal> g)
      : ctx_(std::move(ctx)), f_(std::move(f)), g_(std::move(g)) {
    auto violations = dpair_validate(*ctx_, f_, g_);
    if (!violations.empty()) {
      std::string msg;
      for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v.message;
      throw DomainError("invalid-pair", msg);
    }
  }

  /// g(c) = f(c̄⁰)[x, x⁻¹] on every exclusive cycle.
  static DPair graded(ContextPtr ctx, FunctionTable f) {
    std::vector<LaurentIdeal> g;
    for (std::size_t k = 0; k < ctx->cu().size(); ++k) g.push_back(LaurentIdeal::extend(f.at(ctx->closure_pair(k))));
    return DPair(std::move(ctx), std::move(f), std::move(g));
  }

  static DPair top(ContextPtr ctx) {
    FunctionTable f = constant_table(*ctx, RingIdeal::unit(ctx->ring()));
    return graded(std::move(ctx), std::move(f));
  }
  static DPair bottom(ContextPtr ctx) {
    FunctionTable f = constant_table(*ctx, RingIdeal::zero(ctx->ring()));
    return graded(std::move(ctx), std::move(f));
  }

  const ContextPtr& context() const { return ctx_; }
  const FunctionTable& f() const { return f_; }
  const std::vector<LaurentIdeal>& g() const { return g_; }
  const RingIdeal& f_at(const AdmissiblePair& p) const { return f_[ctx_->lattice().require_index(p)]; }

  /// g at any cycle; outside C_u(E) this is the forced value f(c̄⁰)[x, x⁻¹].
  LaurentIdeal g_at(const CycleClass& c) const {
    if (auto k = ctx_->cu_index(c)) return g_[*k];
    const Graph& gr = ctx_->graph();
    if (!is_cycle_of(gr, c)) throw DomainError("not-a-cycle", "not a cycle of this graph");
    return LaurentIdeal::extend(f_at({cycle_closure(gr, c), {}}));
  }

  bool operator==(const DPair& o) const { return f_ == o.f_ && g_ == o.g_; }

 private:
  ContextPtr ctx_;
  FunctionTable f_;
  std::vector<LaurentIdeal> g_;
};

namespace detail {

inline void require_same_context(const DPair& a, const DPair& b) {
  if (a.context() != b.context() &&
      !(a.context()->ring() == b.context()->ring() &&
        a.context()->lattice().pairs() == b.context()->lattice().pairs() &&
        a.context()->cu() == b.context()->cu())) {
    throw DomainError("context-mismatch", "pairs belong to different graphs or rings");
  }
}

}  // namespace detail

inline bool d_leq(const DPair& a, const DPair& b) {
  detail::require_same_context(a, b);
  for (std::size_t i = 0; i < a.f().size(); ++i) {
    if (!b.f()[i].contains(a.f()[i])) return false;
  }
  for (std::size_t k = 0; k < a.g().size(); ++k) {
    if (!b.g()[k].contains(a.g()[k])) return false;
  }
  return true;
}

inline DPair d_meet(const DPair& a, const DPair& b) {
  detail::require_same_context(a, b);
  FunctionTable f;
  for (std::size_t i = 0; i < a.f().size(); ++i) f.push_back(a.f()[i] & b.f()[i]);
  std::vector<LaurentIdeal> g;
  for (std::size_t k = 0; k < a.g().size(); ++k) g.push_back(a.g()[k] & b.g()[k]);
  return DPair(a.context(), std::move(f), std::move(g));
}

inline DPair d_join(const DPair& a, const DPair& b) {
  detail::require_same_context(a, b);
  const LatticeContext& ctx = *a.context();
  FunctionTable f;
  for (std::size_t i = 0; i < a.f().size(); ++i) f.push_back(a.f()[i] + b.f()[i]);
  std::vector<LaurentIdeal> g;
  for (std::size_t k = 0; k < a.g().size(); ++k) {
    g.push_back(a.g()[k] + b.g()[k]);
    std::size_t c = ctx.closure_pair(k);
    f[c] = f[c] + g.back().contract();
  }
  return DPair(a.context(), saturate_function(ctx, std::move(f)), std::move(g));
}

inline DPair d_product(const DPair& a, const DPair& b) {
  detail::require_same_context(a, b);
  const LatticeContext& ctx = *a.context();
  FunctionTable f;
  for (std::size_t i = 0; i < a.f().size(); ++i) f.push_back(a.f()[i] * b.f()[i]);
  std::vector<LaurentIdeal> g;
  for (std::size_t k = 0; k < a.g().size(); ++k) {
    g.push_back(a.g()[k] * b.g()[k]);
    std::size_t c = ctx.closure_pair(k);
    f[c] = f[c] + g.back().contract();
  }
  return DPair(a.context(), saturate_function(ctx, std::move(f)), std::move(g));
}

inline bool is_graded(const DPair& p) {
  const LatticeContext& ctx = *p.context();
  for (std::size_t k = 0; k < p.g().size(); ++k) {
    if (!(p.g()[k] == LaurentIdeal::extend(p.f()[ctx.closure_pair(k)]))) return false;
  }
  return true;
}

/// (f, f_C) with f_C(c) = f(c̄⁰)[x, x⁻¹].
inline DPair largest_graded(const DPair& p) { return DPair::graded(p.context(), p.f()); }

/// All saturated functions with values in the (finite) ideal set of R.
inline std::vector<FunctionTable> graded_lattice(const LatticeContext& ctx) {
  const std::vector<RingIdeal> values = ideal_enumerate(ctx.ring());
  const PairLattice& lat = ctx.lattice();
  std::vector<std::size_t> order;
  for (std::size_t a : ctx.top_down()) {
    if (a != lat.bottom()) order.push_back(a);
  }
  FunctionTable f = constant_table(ctx, RingIdeal::unit(ctx.ring()));
  std::vector<bool> assigned(ctx.size(), false);
  assigned[lat.bottom()] = true;
  std::vector<FunctionTable> out;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      out.push_back(f);
      return;
    }
    const std::size_t a = order[depth];
    for (const RingIdeal& v : values) {
      f[a] = v;
      bool ok = true;
      for (std::size_t y = 0; y < ctx.size() && ok; ++y) {
        if (!assigned[y] || y == a) continue;
        ok = f[lat.join(a, y)] == (f[a] & f[y]);
      }
      if (!ok) continue;
      assigned[a] = true;
      self(self, depth + 1);
      assigned[a] = false;
    }
  };
  rec(rec, 0);
  return out;
}

struct PrimeReport {
  /// Pair labels whose value is neither prime nor R.
  std::vector<std::string> non_prime_values;
  /// For each ideal J in the image of f: (J, H_J, whether E⁰ ∖ H_J is downward directed).
  struct DirectedCheck {
    RingIdeal value;
    VertexSet h;
    bool directed;
  };
  std::vector<DirectedCheck> directed_checks;

  bool condition_values() const { return non_prime_values.empty(); }
  bool condition_directed() const {
    return std::all_of(directed_checks.begin(), directed_checks.end(), [](const auto& c) { return c.directed; });
  }
  bool passes() const { return condition_values() && condition_directed(); }
};

/// Necessary conditions for primeness of a graded ideal on a row-finite
/// graph with condition (K). Passing does not decide primeness.
inline PrimeReport prime_necessary(const DPair& p) {
  const LatticeContext& ctx = *p.context();
  const Graph& g = ctx.graph();
  if (!row_finite(g) || !ctx.cu().empty()) {
    throw DomainError("out-of-scope",
                      "prime conditions are only available for row-finite graphs satisfying condition (K)");
  }
  const PairLattice& lat = ctx.lattice();
  PrimeReport report;
  std::vector<RingIdeal> image;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    const RingIdeal& v = p.f()[a];
    if (a != lat.bottom() && !v.is_unit() && !v.is_prime()) report.non_prime_values.push_back(lat.label(a));
    if (std::find(image.begin(), image.end(), v) == image.end()) image.push_back(v);
  }
  for (const RingIdeal& j : image) {
    std::vector<std::size_t> family;
    for (std::size_t a = 0; a < ctx.size(); ++a) {
      if (p.f()[a].contains(j)) family.push_back(a);
    }
    VertexSet h = lat[lat.sup(family)].H;
    report.directed_checks.push_back({j, h, downward_directed(g, g.all_vertices() - h)});
  }
  return report;
}

}  // namespace lpa
