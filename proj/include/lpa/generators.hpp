#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lpa/ideal_lattice.hpp"

namespace lpa {

/// r·v.
struct ScaledVertex {
  Scalar r;
  std::size_t v;

  bool operator==(const ScaledVertex&) const = default;
};

/// r·w^H with w a breaking vertex for the hereditary saturated set H.
struct ScaledBreaking {
  Scalar r;
  std::size_t w;
  VertexSet H;

  bool operator==(const ScaledBreaking&) const = default;
};

/// p(c).
struct CyclePoly {
  LaurentPoly p;
  CycleClass c;

  bool operator==(const CyclePoly&) const = default;
};

using Generator = std::variant<ScaledVertex, ScaledBreaking, CyclePoly>;
using GeneratorSet = std::vector<Generator>;

namespace detail {

/// f(b) = value for b ≤ a, zero elsewhere.
inline FunctionTable down_set_table(const LatticeContext& ctx, std::size_t a, const RingIdeal& value) {
  FunctionTable f = constant_table(ctx, RingIdeal::zero(ctx.ring()));
  for (std::size_t b : ctx.below(a)) f[b] = value;
  f[a] = value;
  f[ctx.lattice().bottom()] = RingIdeal::unit(ctx.ring());
  return f;
}

inline DPair vertex_atom(const ContextPtr& ctx, const Scalar& r, std::size_t v) {
  RingIdeal value(ctx->ring(), r);
  return DPair::graded(ctx, saturate_function(*ctx, down_set_table(*ctx, ctx->vertex_pair(v), value)));
}

inline DPair breaking_atom(const ContextPtr& ctx, const Scalar& r, std::size_t w, VertexSet h) {
  const Graph& g = ctx->graph();
  if (!is_hereditary_saturated(g, h)) {
    throw DomainError("not-hereditary-saturated", g.label(h) + " is not hereditary and saturated");
  }
  if (!breaking_vertices(g, h).contains(w)) {
    throw DomainError("not-breaking", g.vertex_id(w) + " is not a breaking vertex for " + g.label(h));
  }
  VertexSet targets;
  for (std::size_t b : g.out_bundles(w)) {
    if (h.contains(g.bundle(b).target)) targets.insert(g.bundle(b).target);
  }
  AdmissiblePair minimal{hs_closure(g, targets), VertexSet::single(w)};
  std::size_t a = ctx->lattice().require_index(minimal);
  RingIdeal value(ctx->ring(), r);
  return DPair::graded(ctx, saturate_function(*ctx, down_set_table(*ctx, a, value)));
}

inline std::vector<DPair> cycle_atoms(const ContextPtr& ctx, const LaurentPoly& p, const CycleClass& c) {
  const RingSpec& ring = ctx->ring();
  const LaurentIdeal principal = LaurentIdeal::generated(ring, {p});
  auto k = ctx->cu_index(c);
  if (!k) {
    if (!is_cycle_of(ctx->graph(), c)) throw DomainError("not-a-cycle", "not a cycle of this graph");
    // Outside C_u(E) a cycle polynomial only contributes its coefficients at the base.
    return {vertex_atom(ctx, Scalar(principal.coefficient_ideal().generator()), c.base())};
  }
  FunctionTable f = down_set_table(*ctx, ctx->down_pair(*k), principal.coefficient_ideal());
  std::size_t closure = ctx->closure_pair(*k);
  f[closure] = f[closure] + principal.contract();
  f = saturate_function(*ctx, std::move(f));
  std::vector<LaurentIdeal> g;
  for (std::size_t j = 0; j < ctx->cu().size(); ++j) {
    LaurentIdeal ext = LaurentIdeal::extend(f[ctx->closure_pair(j)]);
    g.push_back(j == *k ? principal + ext : ext);
  }
  return {DPair(ctx, std::move(f), std::move(g))};
}

}  // namespace detail

/// The pair of the ideal generated by `gs`: the join of one atom per generator.
inline DPair from_generators(const ContextPtr& ctx, const GeneratorSet& gs) {
  DPair acc = DPair::bottom(ctx);
  for (const Generator& gen : gs) {
    if (const auto* sv = std::get_if<ScaledVertex>(&gen)) {
      if (sv->v >= ctx->graph().vertex_count()) throw DomainError("unknown-vertex", "vertex index out of range");
      acc = d_join(acc, detail::vertex_atom(ctx, sv->r, sv->v));
    } else if (const auto* sb = std::get_if<ScaledBreaking>(&gen)) {
      acc = d_join(acc, detail::breaking_atom(ctx, sb->r, sb->w, sb->H));
    } else {
      const auto& cp = std::get<CyclePoly>(gen);
      for (const DPair& atom : detail::cycle_atoms(ctx, cp.p, cp.c)) acc = d_join(acc, atom);
    }
  }
  return acc;
}

/// A finite generating set: for each value J ≠ 0 of f, at the largest pair
/// (H, S) with f(H, S) = J, the generator of J times each v ∈ H with
/// f(v̄) = J and each w^H for w ∈ S; then the basis of g(c) for every
/// exclusive cycle where g is not graded.
inline GeneratorSet to_generators(const DPair& p) {
  const LatticeContext& ctx = *p.context();
  const PairLattice& lat = ctx.lattice();
  const FunctionTable& f = p.f();
  GeneratorSet out;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (a == lat.bottom() || f[a].is_zero()) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < ctx.size() && maximal; ++b) {
      if (b != a && lat.leq(a, b) && f[b] == f[a]) maximal = false;
    }
    if (!maximal) continue;
    const Scalar r(f[a].generator());
    for (std::size_t v : lat[a].H.members()) {
      if (f[ctx.vertex_pair(v)] == f[a]) out.push_back(ScaledVertex{r, v});
    }
    for (std::size_t w : lat[a].S.members()) out.push_back(ScaledBreaking{r, w, lat[a].H});
  }
  for (std::size_t k = 0; k < ctx.cu().size(); ++k) {
    if (p.g()[k] == LaurentIdeal::extend(f[ctx.closure_pair(k)])) continue;
    for (const LaurentPoly& q : p.g()[k].generators()) out.push_back(CyclePoly{q, ctx.cu()[k]});
  }
  return out;
}

}  // namespace lpa
