#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lpa/ideal_lattice.hpp"

namespace lpa::oracle {

/// u carries the loop, v is the sink.
struct ToeplitzRoles {
  std::size_t u;
  std::size_t v;
};

inline std::optional<ToeplitzRoles> toeplitz_roles(const Graph& g) {
  if (g.vertex_count() != 2 || g.bundle_count() != 2) return std::nullopt;
  for (const Bundle& b : g.bundles()) {
    if (b.multiplicity.is_omega() || b.multiplicity.count() != 1) return std::nullopt;
  }
  for (std::size_t u = 0; u < 2; ++u) {
    std::size_t v = 1 - u;
    bool loop = false;
    bool out = false;
    for (const Bundle& b : g.bundles()) {
      loop = loop || (b.source == u && b.target == u);
      out = out || (b.source == u && b.target == v);
    }
    if (loop && out) return ToeplitzRoles{u, v};
  }
  return std::nullopt;
}

/// A candidate over the Toeplitz graph: f({v}) = (a), f(T⁰) = (b),
/// g(e) = ⟨b⟩ + a·I. Nothing is validated.
struct ToeplitzCandidate {
  FunctionTable f;
  std::vector<LaurentIdeal> g;
};

inline std::size_t toeplitz_index(const LatticeContext& ctx, bool whole) {
  auto roles = toeplitz_roles(ctx.graph());
  if (!roles || ctx.ring().kind() != RingSpec::Kind::Integers) {
    throw DomainError("wrong-context", "the Toeplitz reference needs the Toeplitz graph over Z");
  }
  VertexSet h = VertexSet::single(roles->v);
  if (whole) h.insert(roles->u);
  return ctx.lattice().require_index({h, {}});
}

inline ToeplitzCandidate toeplitz_candidate(const LatticeContext& ctx, long a, long b, const LaurentIdeal& i) {
  const RingSpec z = RingSpec::integers();
  FunctionTable f = constant_table(ctx, RingIdeal::zero(z));
  f[toeplitz_index(ctx, false)] = RingIdeal(z, a);
  f[toeplitz_index(ctx, true)] = RingIdeal(z, b);
  std::vector<LaurentPoly> gens{LaurentPoly(b)};
  for (const LaurentPoly& p : i.generators()) gens.push_back(p.scaled(a));
  return {f, {LaurentIdeal::generated(z, gens)}};
}

/// Whether (f, g) is one of the pairs "f({v}) = (a), f(T⁰) = (b) with a | b,
/// g(e) = bℤ[x, x⁻¹] + aI, I ∩ ℤ ⊆ (b/a)". The residual I is taken as
/// g(e) : a, the largest choice, which contains b/a.
inline bool toeplitz_Z_accepts(const LatticeContext& ctx, const FunctionTable& f, const std::vector<LaurentIdeal>& g) {
  const std::size_t sink = toeplitz_index(ctx, false);
  const std::size_t whole = toeplitz_index(ctx, true);
  if (f.size() != 3 || g.size() != 1) return false;
  if (!f[ctx.lattice().bottom()].is_unit()) return false;
  const mpz_class a = f[sink].generator();
  const mpz_class b = f[whole].generator();
  if (a == 0) return b == 0 && g[0].is_zero();
  if (b % a != 0) return false;
  const LaurentIdeal& j = g[0];
  if (!j.member(LaurentPoly(Scalar(b)))) return false;
  std::vector<LaurentPoly> residual;
  for (const LaurentPoly& p : j.generators()) {
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) {
      if (c.get_den() != 1 || c.get_num() % a != 0) return false;
      q.add_term(e, Scalar(mpz_class(c.get_num() / a)));
    }
    residual.push_back(q);
  }
  const LaurentIdeal i = LaurentIdeal::generated(RingSpec::integers(), residual);
  return RingIdeal(RingSpec::integers(), Scalar(mpz_class(b / a))).contains(i.contract());
}

inline std::function<bool(const LatticeContext&, const FunctionTable&, const std::vector<LaurentIdeal>&)>
toeplitz_Z_reference() {
  return toeplitz_Z_accepts;
}

}  // namespace lpa::oracle
