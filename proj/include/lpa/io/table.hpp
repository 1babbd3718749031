#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "lpa/ideal_lattice.hpp"
#include "lpa/io/literals.hpp"

namespace lpa::io {

using Json = nlohmann::json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(1, e.byte, std::string("invalid JSON: ") + e.what());
  }
}

namespace detail {

inline const std::string& as_string(const Json& v, const std::string& key) {
  if (!v.is_string()) throw ParseError(1, 1, "value for '" + key + "' must be a string");
  return v.get_ref<const std::string&>();
}

}  // namespace detail

/// Raw f-table from `{"f": {"{u,v}": "(2)", ...}, "vertices": {"v": "(3)"}}`.
/// Missing pairs are (0); a `vertices` entry sets f(H, S) to the intersection
/// of the values of the vertices of H.
inline FunctionTable read_function_table(const LatticeContext& ctx, const Json& doc) {
  const Graph& g = ctx.graph();
  const PairLattice& lat = ctx.lattice();
  if (!doc.is_object()) throw ParseError(1, 1, "table document must be a JSON object");
  FunctionTable f = constant_table(ctx, RingIdeal::zero(ctx.ring()));
  if (doc.contains("vertices")) {
    const Json& vs = doc.at("vertices");
    if (!vs.is_object()) throw ParseError(1, 1, "'vertices' must be an object");
    std::vector<RingIdeal> per_vertex(g.vertex_count(), RingIdeal::zero(ctx.ring()));
    for (const auto& [id, value] : vs.items()) {
      per_vertex[g.require_vertex(id)] = parse_ring_ideal(ctx.ring(), detail::as_string(value, id));
    }
    for (std::size_t a = 0; a < ctx.size(); ++a) {
      if (a == lat.bottom()) continue;
      RingIdeal acc = RingIdeal::unit(ctx.ring());
      for (std::size_t v : lat[a].H.members()) acc = acc & per_vertex[v];
      f[a] = acc;
    }
  }
  if (doc.contains("f")) {
    const Json& fs = doc.at("f");
    if (!fs.is_object()) throw ParseError(1, 1, "'f' must be an object");
    for (const auto& [label, value] : fs.items()) {
      std::size_t a = lat.require_index(parse_pair(g, label));
      if (a == lat.bottom()) throw DomainError("bad-table", "f is not defined at (∅,∅)");
      f[a] = parse_ring_ideal(ctx.ring(), detail::as_string(value, label));
    }
  }
  return f;
}

/// g-table from `{"g": {"e": "<4, 2x + 2>"}}`; missing cycles get f(c̄⁰)[x, x⁻¹].
inline std::vector<LaurentIdeal> read_cycle_table(const LatticeContext& ctx, const FunctionTable& f, const Json& doc) {
  std::vector<LaurentIdeal> g;
  for (std::size_t k = 0; k < ctx.cu().size(); ++k) g.push_back(LaurentIdeal::extend(f[ctx.closure_pair(k)]));
  if (!doc.contains("g")) return g;
  const Json& gs = doc.at("g");
  if (!gs.is_object()) throw ParseError(1, 1, "'g' must be an object");
  for (const auto& [label, value] : gs.items()) {
    CycleClass c = parse_cycle(ctx.graph(), label);
    auto k = ctx.cu_index(c);
    if (!k) {
      throw DomainError("not-exclusive", "cycle " + label + " is not exclusive; g is only defined on C_u(E)");
    }
    g[*k] = parse_laurent_ideal(ctx.ring(), detail::as_string(value, label));
  }
  return g;
}

inline DPair read_dpair(const ContextPtr& ctx, const Json& doc) {
  FunctionTable f = read_function_table(*ctx, doc);
  std::vector<LaurentIdeal> g = read_cycle_table(*ctx, f, doc);
  return DPair(ctx, std::move(f), std::move(g));
}

inline DPair read_dpair(const ContextPtr& ctx, std::string_view text) { return read_dpair(ctx, parse_json(text)); }

inline Json function_to_json(const LatticeContext& ctx, const FunctionTable& f) {
  Json out = Json::object();
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (a != ctx.lattice().bottom()) out[ctx.lattice().label(a)] = f[a].to_string();
  }
  return out;
}

inline Json dpair_to_json(const DPair& p) {
  const LatticeContext& ctx = *p.context();
  Json g = Json::object();
  for (std::size_t k = 0; k < ctx.cu().size(); ++k) g[ctx.cycle_label(k)] = p.g()[k].to_string();
  Json out;
  out["f"] = function_to_json(ctx, p.f());
  out["g"] = g;
  out["graded"] = is_graded(p);
  return out;
}

inline std::string dpair_to_text(const DPair& p) {
  const LatticeContext& ctx = *p.context();
  std::string out;
  for (std::size_t a = 0; a < ctx.size(); ++a) {
    if (a == ctx.lattice().bottom()) continue;
    out += "f" + ctx.lattice().label(a) + " = " + p.f()[a].to_string() + "\n";
  }
  for (std::size_t k = 0; k < ctx.cu().size(); ++k) {
    out += "g(" + ctx.cycle_label(k) + ") = " + p.g()[k].to_string() + "\n";
  }
  return out;
}

}  // namespace lpa::io
